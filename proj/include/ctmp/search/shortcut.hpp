#pragma once

#include <cstdint>
#include <vector>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/search/deadline.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

/// Single-DOF unit-step walk from a to b that tracks the straight line in
/// lattice coordinates (per-joint shortest wrap direction). Includes both
/// endpoints; its length is the lattice Manhattan distance plus one.
std::vector<Config> lattice_line(const Scenario& scenario, const Config& a, const Config& b);

struct ShortcutSample {
    double elapsed_ms = 0.0;
    double cost = 0.0;
};

struct ShortcutResult {
    Path path;
    std::vector<ShortcutSample> improvements;
    std::uint64_t trials = 0;
};

inline constexpr int kShortcutPatience = 100;

/// Random shortcutting: pick two path indices, splice in the lattice line
/// between them when every config on it is valid and the cost drops. Stops
/// at the deadline or after `patience` consecutive failed trials.
/// Deterministic for a fixed seed (given the deadline does not cut it).
ShortcutResult shortcut_path(const Scenario& scenario, const Path& path, Deadline deadline, std::uint64_t seed,
                             int patience = kShortcutPatience);

}  // namespace ctmp

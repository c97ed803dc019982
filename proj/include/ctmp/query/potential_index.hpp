#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ctmp/preprocess/library.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

enum class Provenance {
    kHome,
    kOnRepPath,       // entry_id + position along that entry's representative path
    kInGoalRegion,    // entry_id of the covering neighbourhood
    kOnExecutedPath,  // position along the latest executed path
};

const char* to_string(Provenance p) noexcept;

struct PotentialState {
    Provenance kind = Provenance::kHome;
    std::uint32_t entry_id = 0;
    std::uint32_t position = 0;

    bool operator==(const PotentialState&) const = default;
};

/// States the robot may start a query from, each with the recipe for
/// rebuilding a path from home to it. Home and representative-path states
/// come from the library; covered goal states are resolved through the
/// library's goal table; the most recently executed path is kept on top.
/// Lookup priority: home, representative path, goal region, executed path.
/// Single writer: updates must be serialised per robot.
class PotentialStateIndex {
public:
    PotentialStateIndex() = default;
    explicit PotentialStateIndex(const Library& library);

    [[nodiscard]] std::optional<PotentialState> lookup(StateId s) const;

    /// Replaces the executed-path layer with `executed` (ids along the path).
    void update(std::vector<StateId> executed);

    [[nodiscard]] const std::vector<StateId>& executed() const noexcept { return executed_; }

private:
    const Library* library_ = nullptr;
    StateId home_ = 0;
    std::unordered_map<StateId, PotentialState> rep_states_;
    std::vector<StateId> executed_;
    std::unordered_map<StateId, std::uint32_t> executed_pos_;
};

}  // namespace ctmp

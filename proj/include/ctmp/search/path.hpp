#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/cspace/scenario.hpp"

namespace ctmp {

/// Ordered lattice walk. Consecutive configs are lattice neighbours and cost
/// is the sum of unit edge costs, i.e. configs.size() - 1.
struct Path {
    std::vector<Config> configs;
    double cost = 0.0;

    [[nodiscard]] bool empty() const noexcept { return configs.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return configs.size(); }
    [[nodiscard]] const Config& front() const { return configs.front(); }
    [[nodiscard]] const Config& back() const { return configs.back(); }

    bool operator==(const Path&) const = default;
};

/// Builds a path from configs with unit edge costs.
Path make_path(std::vector<Config> configs);

Path reversed(const Path& path);

/// a then b, sharing the junction config once. Requires a.back() == b.front().
Path concatenate(const Path& a, const Path& b);

/// Independent edge-by-edge re-validation: every config collision-free,
/// consecutive configs one lattice move apart, cost consistent. Returns a
/// description of the first problem, or nullopt when the path is fine.
std::optional<std::string> check_path(const Scenario& scenario, const Path& path);

inline bool path_is_valid(const Scenario& scenario, const Path& path) {
    return !check_path(scenario, path).has_value();
}

}  // namespace ctmp

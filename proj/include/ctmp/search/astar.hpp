#pragma once

#include <cstdint>
#include <functional>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/search/deadline.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

enum class SearchStatus { kFound, kTimeout, kNoPath };

const char* to_string(SearchStatus status) noexcept;

struct SearchResult {
    SearchStatus status = SearchStatus::kNoPath;
    Path path;  // set iff status == kFound
    std::uint64_t expansions = 0;
    double elapsed_ms = 0.0;

    [[nodiscard]] bool found() const noexcept { return status == SearchStatus::kFound; }
};

using GoalTest = std::function<bool(const Config&)>;
using HeuristicFn = std::function<double(const Config&)>;

/// Weighted A* (f = g + weight * h) with each state expanded at most once.
/// Ties on f go to the larger g, then to the lexicographically smaller
/// config. With weight 1 and the lattice heuristic the result is optimal;
/// otherwise cost <= weight * optimal.
SearchResult astar(const Scenario& scenario, const Config& start, const Config& goal, double weight,
                   Deadline deadline = Deadline::never());

/// Predicate-goal variant. The heuristic defaults to zero (Dijkstra order).
SearchResult astar(const Scenario& scenario, const Config& start, const GoalTest& goal_test, double weight,
                   Deadline deadline = Deadline::never(), const HeuristicFn& heuristic = {});

}  // namespace ctmp

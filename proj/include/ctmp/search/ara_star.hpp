#pragma once

#include <cstdint>
#include <vector>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/search/astar.hpp"
#include "ctmp/search/deadline.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

struct AraIteration {
    double weight = 1.0;
    double cost = 0.0;
    double elapsed_ms = 0.0;
    std::uint64_t expansions = 0;
};

struct AraResult {
    /// kFound once any solution exists; kTimeout if the deadline hit before
    /// the first solution; kNoPath if the goal is unreachable.
    SearchStatus status = SearchStatus::kNoPath;
    Path path;
    std::vector<AraIteration> profile;
    bool optimal = false;  // the weight-1 iteration completed
};

/// Classic anytime repairing A* from scratch: weighted A* iterations with
/// weight <- max(1, weight - weight_step), INCONS carried over between
/// iterations, no path seeding.
AraResult ara_star(const Scenario& scenario, const Config& start, const Config& goal, double initial_weight,
                   double weight_step, Deadline deadline);

}  // namespace ctmp

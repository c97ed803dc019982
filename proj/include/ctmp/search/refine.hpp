#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/search/deadline.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

/// Default slack added to h in the inflation rules, in lattice-cost units.
inline constexpr double kDefaultDelta = 1e-6;

/// g and h of one state, the inputs of the inflation rules.
struct CostToGo {
    double g = 0.0;
    double h = 0.0;
};

/// Largest inflation that still leaves a path state strictly below the
/// incumbent cost: max over path states of (C - g) / (h + delta), clamped
/// below at 1. Throws Error{kDegeneratePath} for fewer than two states.
double epsilon_init(std::span<const CostToGo> path_states, double incumbent_cost, double delta = kDefaultDelta);

/// Next inflation: min(path maximum, OPEN maximum) of (C - g) / (h + delta),
/// clamped below at 1. An empty OPEN uses the path maximum alone.
double epsilon_update(std::span<const CostToGo> path_states, std::span<const CostToGo> open_states,
                      double incumbent_cost, double delta = kDefaultDelta);

struct RefineIteration {
    double epsilon = 1.0;
    double cost = 0.0;
    std::uint64_t expansions = 0;
    /// Milliseconds since the query's start instant when the iteration ended.
    double elapsed_ms = 0.0;
    /// Some OPEN state had g + epsilon * h < C when the iteration began.
    bool expansion_guaranteed = true;
};

/// Bookkeeping of one refinement run.
struct RefineReport {
    double delta = kDefaultDelta;
    double initial_cost = 0.0;
    double final_cost = 0.0;
    std::vector<double> epsilon_history;  // one entry per completed iteration
    std::vector<double> iteration_costs;  // incumbent cost after each completed iteration
    std::vector<RefineIteration> iterations;
    std::vector<Path> iteration_paths;  // filled when RefineOptions::record_paths
    std::uint64_t total_expansions = 0;
    /// Max expansions of a single state within any one iteration (1 by construction).
    std::uint32_t max_expansions_per_state = 0;
    bool optimal = false;       // an iteration at epsilon == 1 completed
    bool deadline_hit = false;  // stopped by the time budget
};

struct RefineOptions {
    double delta = kDefaultDelta;
    bool record_paths = false;
};

struct RefineOutcome {
    Path path;
    RefineReport report;
};

/// Path-seeded anytime weighted A*. OPEN starts with every state of the
/// initial path at its path g-value; iterations run at strictly decreasing
/// inflation down to a final iteration at 1, carrying OPEN and INCONS over
/// and re-seeding the incumbent path each time. Returns the best path found
/// when the budget (measured from t_start) runs out, or after the epsilon == 1
/// iteration. Never returns a path costlier than the initial one.
RefineOutcome anytime_refine(const Scenario& scenario, const Config& start, const Config& goal,
                             const Path& initial_path, Clock::time_point t_start, Millis t_bound,
                             const RefineOptions& options = {});

}  // namespace ctmp

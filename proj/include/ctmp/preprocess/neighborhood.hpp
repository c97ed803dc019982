#pragma once

#include <optional>
#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/cspace/scenario.hpp"
#include "ctmp/cspace/state_space.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

/// States from which greedy descent of the navigation function reaches the
/// attractor without collision. Members are lattice ids, sorted ascending.
struct Neighborhood {
    Config attractor;
    std::vector<StateId> members;
    /// Longest greedy descent from any member to the attractor.
    int max_descent_steps = 0;

    [[nodiscard]] bool contains(StateId id) const;
    bool operator==(const Neighborhood&) const = default;
};

struct NeighborhoodBuild {
    Neighborhood neighborhood;
    /// Valid states adjacent to a member but not admitted, sorted.
    std::vector<StateId> frontier;
};

/// One greedy move from q towards the attractor: the valid neighbour with
/// the smallest navigation value (ties to the smaller id), provided that
/// value is strictly below q's. Collision-checks the neighbours.
std::optional<StateId> greedy_step(const StateSpace& space, StateId q, StateId attractor);

/// Maximal set of valid states whose iterated greedy descent ends at the
/// attractor, grown outward from the attractor: a state is admitted exactly
/// when its greedy step lands on an admitted state.
NeighborhoodBuild construct_neighborhood(const Scenario& scenario, const Config& attractor);

/// Greedy descent from q to the attractor with collision checks. Throws
/// Error{kDescentStalled} when no valid neighbour strictly improves and
/// Error{kBoundExceeded} when step_bound moves do not suffice.
Path descend(const Scenario& scenario, const Config& q, const Config& attractor, int step_bound);

/// Online descent: the same greedy rule evaluated against neighbourhood
/// membership instead of collision checks (members are certified valid and
/// every member's greedy step is a member). No collision checks and no
/// search; each move counts one elementary step. Throws
/// Error{kDescentStalled} if q is not a member or the walk leaves the set.
Path descend_within(const StateSpace& space, const Neighborhood& neighborhood, const Config& q);

}  // namespace ctmp

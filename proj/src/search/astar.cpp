#include "ctmp/search/astar.hpp"

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "search_state.hpp"

namespace ctmp {

const char* to_string(SearchStatus status) noexcept {
    switch (status) {
        case SearchStatus::kFound: return "Found";
        case SearchStatus::kTimeout: return "Timeout";
        case SearchStatus::kNoPath: return "NoPath";
    }
    return "Unknown";
}

namespace {

template <typename IsGoal, typename H>
SearchResult run_weighted_astar(const StateSpace& space, StateId start, IsGoal&& is_goal, H&& h, double weight,
                                Deadline deadline) {
    const auto t0 = Clock::now();
    SearchResult result;
    detail::SearchState st(space.size());
    st.set(start, 0.0, detail::kNoParent);
    st.push_open(start, weight * h(start));
    std::vector<StateId> succ;
    StateId s = 0;
    while (true) {
        if (deadline.passed()) {
            result.status = SearchStatus::kTimeout;
            break;
        }
        if (!st.pop_open(s)) {
            result.status = SearchStatus::kNoPath;
            break;
        }
        if (is_goal(s)) {
            result.status = SearchStatus::kFound;
            result.path = st.extract(space, s);
            break;
        }
        st.close(s);
        ++result.expansions;
        ++op_counters().expansions;
        space.successors(s, succ);
        const double gs = st.g(s);
        for (StateId n : succ) {
            if (st.closed(n)) continue;
            const double cand = gs + StateSpace::edge_cost();
            if (cand < st.g(n)) {
                st.set(n, cand, s);
                st.push_open(n, cand + weight * h(n));
            }
        }
    }
    result.elapsed_ms = elapsed_ms(t0);
    return result;
}

void check_start(const StateSpace& space, const Config& start) {
    if (!space.lattice().contains(start) || !space.valid(space.id(start))) {
        throw Error(ErrorCode::kInvalidConfig, "search start (" + to_string(start) + ") is not valid");
    }
}

}  // namespace

SearchResult astar(const Scenario& scenario, const Config& start, const Config& goal, double weight,
                   Deadline deadline) {
    const StateSpace space(scenario);
    check_start(space, start);
    if (!space.lattice().contains(goal)) {
        throw Error(ErrorCode::kInvalidConfig, "search goal (" + to_string(goal) + ") is off the lattice");
    }
    const StateId goal_id = space.id(goal);
    return run_weighted_astar(
        space, space.id(start), [goal_id](StateId s) { return s == goal_id; },
        [&](StateId s) { return space.heuristic(s, goal_id); }, weight, deadline);
}

SearchResult astar(const Scenario& scenario, const Config& start, const GoalTest& goal_test, double weight,
                   Deadline deadline, const HeuristicFn& heuristic) {
    const StateSpace space(scenario);
    check_start(space, start);
    return run_weighted_astar(
        space, space.id(start), [&](StateId s) { return goal_test(space.config(s)); },
        [&](StateId s) { return heuristic ? heuristic(space.config(s)) : 0.0; }, weight, deadline);
}

}  // namespace ctmp

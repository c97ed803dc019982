#include "ctmp/search/ara_star.hpp"

#include <algorithm>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "search_state.hpp"

namespace ctmp {

AraResult ara_star(const Scenario& scenario, const Config& start, const Config& goal, double initial_weight,
                   double weight_step, Deadline deadline) {
    if (!(initial_weight >= 1.0) || !(weight_step > 0.0)) {
        throw Error(ErrorCode::kInvalidConfig, "ARA* needs initial weight >= 1 and a positive step");
    }
    const auto t0 = Clock::now();
    const StateSpace space(scenario);
    const StateId start_id = space.id(start);
    const StateId goal_id = space.id(goal);
    auto h = [&](StateId s) { return space.heuristic(s, goal_id); };

    AraResult result;
    detail::SearchState st(space.size());
    st.set(start_id, 0.0, detail::kNoParent);
    st.add_open_member(start_id);
    double w = initial_weight;
    std::vector<StateId> succ;

    while (true) {
        st.rebuild_open(w, h);
        AraIteration iter;
        iter.weight = w;
        bool timed_out = false;
        // ImprovePath: expand while the goal's f exceeds the best OPEN key.
        while (st.g(goal_id) > st.peek_f()) {
            if (deadline.passed()) {
                timed_out = true;
                break;
            }
            StateId s = 0;
            st.pop_open(s);
            st.close(s);
            ++iter.expansions;
            ++op_counters().expansions;
            space.successors(s, succ);
            const double gs = st.g(s);
            for (StateId n : succ) {
                const double cand = gs + StateSpace::edge_cost();
                if (cand < st.g(n)) {
                    st.set(n, cand, s);
                    if (!st.closed(n)) {
                        st.push_open(n, cand + w * h(n));
                    } else {
                        st.add_incons(n);
                    }
                }
            }
        }
        if (timed_out) {
            result.status = result.profile.empty() ? SearchStatus::kTimeout : SearchStatus::kFound;
            break;
        }
        if (st.g(goal_id) == detail::kInf) {
            result.status = SearchStatus::kNoPath;
            break;
        }
        result.status = SearchStatus::kFound;
        result.path = st.extract(space, goal_id);
        iter.cost = st.g(goal_id);
        iter.elapsed_ms = elapsed_ms(t0);
        result.profile.push_back(iter);
        if (w == 1.0) {
            result.optimal = true;
            break;
        }
        w = std::max(1.0, w - weight_step);
        st.merge_incons_into_open();
        st.clear_closed();
    }
    return result;
}

}  // namespace ctmp

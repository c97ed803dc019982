#include "ctmp/search/refine.hpp"

#include <algorithm>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "search_state.hpp"

namespace ctmp {

namespace {

double max_ratio(std::span<const CostToGo> states, double c, double delta) {
    double best = -detail::kInf;
    for (const CostToGo& s : states) best = std::max(best, (c - s.g) / (s.h + delta));
    return best;
}

}  // namespace

double epsilon_init(std::span<const CostToGo> path_states, double incumbent_cost, double delta) {
    if (path_states.size() < 2) {
        throw Error(ErrorCode::kDegeneratePath, "inflation needs a path with at least two states");
    }
    return std::max(1.0, max_ratio(path_states, incumbent_cost, delta));
}

double epsilon_update(std::span<const CostToGo> path_states, std::span<const CostToGo> open_states,
                      double incumbent_cost, double delta) {
    double eps = max_ratio(path_states, incumbent_cost, delta);
    if (!open_states.empty()) eps = std::min(eps, max_ratio(open_states, incumbent_cost, delta));
    return std::max(1.0, eps);
}

RefineOutcome anytime_refine(const Scenario& scenario, const Config& start, const Config& goal,
                             const Path& initial_path, Clock::time_point t_start, Millis t_bound,
                             const RefineOptions& options) {
    if (initial_path.empty() || initial_path.front() != start || initial_path.back() != goal) {
        throw Error(ErrorCode::kInvalidPath, "initial path does not connect start to goal");
    }
    const Clock::time_point deadline = t_start + std::chrono::duration_cast<Clock::duration>(t_bound);
    auto out_of_time = [deadline] { return Clock::now() >= deadline; };

    RefineOutcome out{initial_path, {}};
    RefineReport& report = out.report;
    report.delta = options.delta;
    report.initial_cost = initial_path.cost;
    report.final_cost = initial_path.cost;
    if (out_of_time()) {
        report.deadline_hit = true;
        return out;
    }

    const StateSpace space(scenario);
    const StateId goal_id = space.id(goal);
    auto h = [&](StateId s) { return space.heuristic(s, goal_id); };
    detail::SearchState st(space.size());

    // Seed: relax along the initial path so repeated configs keep their
    // cheapest prefix cost, and put every path state into OPEN.
    StateId prev = detail::kNoParent;
    for (const Config& q : initial_path.configs) {
        const StateId id = space.id(q);
        if (prev == detail::kNoParent) {
            st.set(id, 0.0, detail::kNoParent);
        } else if (const double cand = st.g(prev) + StateSpace::edge_cost(); cand < st.g(id)) {
            st.set(id, cand, prev);
        }
        st.add_open_member(id);
        prev = id;
    }

    auto path_ids = [&](const Path& p) {
        std::vector<StateId> ids;
        ids.reserve(p.size());
        for (const Config& q : p.configs) ids.push_back(space.id(q));
        return ids;
    };
    auto cost_to_go = [&](const std::vector<StateId>& ids) {
        std::vector<CostToGo> v;
        v.reserve(ids.size());
        for (StateId s : ids) v.push_back({st.g(s), h(s)});
        return v;
    };

    Path incumbent = st.extract(space, goal_id);
    std::vector<StateId> incumbent_ids = path_ids(incumbent);
    double cost = st.g(goal_id);
    out.path = incumbent;
    report.final_cost = cost;
    if (incumbent.size() == 1) {
        // Zero-cost path: counts as a completed epsilon == 1 iteration.
        report.epsilon_history.push_back(1.0);
        report.iteration_costs.push_back(cost);
        report.iterations.push_back({1.0, cost, 0, elapsed_ms(t_start), false});
        if (options.record_paths) report.iteration_paths.push_back(incumbent);
        report.optimal = true;
        return out;
    }

    double eps = epsilon_init(cost_to_go(incumbent_ids), cost, options.delta);
    std::vector<StateId> succ;
    std::vector<std::uint32_t> expansions_of(space.size(), 0);

    while (true) {
        if (out_of_time()) {
            report.deadline_hit = true;
            break;
        }
        RefineIteration iter;
        iter.epsilon = eps;
        if (eps > 1.0) {
            iter.expansion_guaranteed = false;
            for (StateId s : st.open_states()) {
                if (st.g(s) + eps * h(s) < cost) {
                    iter.expansion_guaranteed = true;
                    break;
                }
            }
        }
        st.rebuild_open(eps, h);
        bool timed_out = false;
        StateId s = 0;
        while (true) {
            if (out_of_time()) {
                timed_out = true;
                break;
            }
            if (!st.pop_open(s)) break;  // OPEN exhausted: treat as goal re-extraction
            if (s == goal_id) break;
            st.close(s);
            ++iter.expansions;
            ++op_counters().expansions;
            report.max_expansions_per_state = std::max(report.max_expansions_per_state, ++expansions_of[s]);
            space.successors(s, succ);
            const double gs = st.g(s);
            for (StateId n : succ) {
                const double cand = gs + StateSpace::edge_cost();
                if (cand < st.g(n)) {
                    st.set(n, cand, s);
                    if (!st.closed(n)) {
                        st.push_open(n, cand + eps * h(n));
                    } else {
                        st.add_incons(n);
                    }
                }
            }
        }
        report.total_expansions += iter.expansions;
        if (timed_out) {
            report.deadline_hit = true;
            break;
        }

        incumbent = st.extract(space, goal_id);
        incumbent_ids = path_ids(incumbent);
        cost = st.g(goal_id);
        out.path = incumbent;
        report.final_cost = cost;
        iter.cost = cost;
        iter.elapsed_ms = elapsed_ms(t_start);
        report.epsilon_history.push_back(eps);
        report.iteration_costs.push_back(cost);
        report.iterations.push_back(iter);
        if (options.record_paths) report.iteration_paths.push_back(incumbent);
        for (StateId c : st.closed_states()) expansions_of[c] = 0;

        if (eps == 1.0) {
            report.optimal = true;
            break;
        }
        double next = epsilon_update(cost_to_go(incumbent_ids), cost_to_go(st.open_states()), cost, options.delta);
        // Strict decrease is guaranteed whenever OPEN still holds states; an
        // exhausted OPEN goes straight to the final iteration.
        if (!(next < eps)) next = 1.0;

        st.clear_closed();
        st.merge_incons_into_open();
        for (StateId id : incumbent_ids) st.add_open_member(id);
        eps = next;
    }
    return out;
}

}  // namespace ctmp

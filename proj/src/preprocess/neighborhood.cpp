#include "ctmp/preprocess/neighborhood.hpp"

#include <algorithm>
#include <deque>

#include "ctmp/errors.hpp"

namespace ctmp {

namespace {

constexpr StateId kNone = static_cast<StateId>(-1);

/// Shared greedy rule; `allowed(n)` decides whether neighbour n may be used.
template <typename Allowed>
std::optional<StateId> greedy_rule(const StateSpace& space, StateId q, StateId attractor, Allowed&& allowed) {
    const double here = space.navigation(q, attractor);
    StateId best = kNone;
    double best_value = 0.0;
    space.lattice().for_each_neighbor(q, [&](StateId n) {
        if (!allowed(n)) return;
        const double v = space.navigation(n, attractor);
        if (best == kNone || v < best_value || (v == best_value && n < best)) {
            best = n;
            best_value = v;
        }
    });
    if (best == kNone || !(best_value < here)) return std::nullopt;
    return best;
}

}  // namespace

bool Neighborhood::contains(StateId id) const { return std::binary_search(members.begin(), members.end(), id); }

std::optional<StateId> greedy_step(const StateSpace& space, StateId q, StateId attractor) {
    return greedy_rule(space, q, attractor, [&](StateId n) { return space.valid(n); });
}

NeighborhoodBuild construct_neighborhood(const Scenario& scenario, const Config& attractor) {
    const StateSpace space(scenario);
    if (!space.lattice().contains(attractor) || !space.valid(space.id(attractor))) {
        throw Error(ErrorCode::kInvalidConfig, "attractor (" + to_string(attractor) + ") is not valid");
    }
    const std::size_t n = space.size();
    const StateId root = space.id(attractor);

    // Validity and greedy targets are memoised; each state is collision
    // checked at most once per construction.
    std::vector<std::int8_t> validity(n, -1);
    auto valid = [&](StateId s) {
        if (validity[s] < 0) validity[s] = space.valid(s) ? 1 : 0;
        return validity[s] == 1;
    };
    std::vector<StateId> greedy(n, kNone);
    std::vector<std::uint8_t> greedy_known(n, 0);
    auto greedy_of = [&](StateId s) {
        if (!greedy_known[s]) {
            greedy_known[s] = 1;
            greedy[s] = greedy_rule(space, s, root, valid).value_or(kNone);
        }
        return greedy[s];
    };

    std::vector<int> depth(n, -1);
    depth[root] = 0;
    std::vector<StateId> admitted{root};
    std::deque<StateId> queue{root};
    int max_depth = 0;
    while (!queue.empty()) {
        const StateId m = queue.front();
        queue.pop_front();
        space.lattice().for_each_neighbor(m, [&](StateId cand) {
            if (depth[cand] >= 0 || !valid(cand)) return;
            if (greedy_of(cand) != m) return;
            depth[cand] = depth[m] + 1;
            max_depth = std::max(max_depth, depth[cand]);
            admitted.push_back(cand);
            queue.push_back(cand);
        });
    }
    std::sort(admitted.begin(), admitted.end());

    std::vector<StateId> frontier;
    for (StateId m : admitted) {
        space.lattice().for_each_neighbor(m, [&](StateId cand) {
            if (depth[cand] < 0 && valid(cand)) frontier.push_back(cand);
        });
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

    NeighborhoodBuild out;
    out.neighborhood.attractor = attractor;
    out.neighborhood.members = std::move(admitted);
    out.neighborhood.max_descent_steps = max_depth;
    out.frontier = std::move(frontier);
    return out;
}

Path descend(const Scenario& scenario, const Config& q, const Config& attractor, int step_bound) {
    const StateSpace space(scenario);
    const StateId target = space.id(attractor);
    StateId cur = space.id(q);
    std::vector<Config> configs{q};
    int steps = 0;
    while (cur != target) {
        if (steps >= step_bound) {
            throw Error(ErrorCode::kBoundExceeded,
                        "descent from (" + to_string(q) + ") needs more than " + std::to_string(step_bound) + " steps");
        }
        const auto next = greedy_step(space, cur, target);
        if (!next) {
            throw Error(ErrorCode::kDescentStalled, "no improving valid move at (" + to_string(space.config(cur)) + ")");
        }
        cur = *next;
        configs.push_back(space.config(cur));
        ++steps;
    }
    return make_path(std::move(configs));
}

Path descend_within(const StateSpace& space, const Neighborhood& neighborhood, const Config& q) {
    const StateId target = space.id(neighborhood.attractor);
    StateId cur = space.id(q);
    if (!neighborhood.contains(cur)) {
        throw Error(ErrorCode::kDescentStalled, "(" + to_string(q) + ") is not a neighbourhood member");
    }
    std::vector<Config> configs{q};
    int steps = 0;
    while (cur != target) {
        if (steps >= neighborhood.max_descent_steps) {
            throw Error(ErrorCode::kBoundExceeded, "descent exceeded the recorded bound");
        }
        const auto next = greedy_rule(space, cur, target, [&](StateId n) { return neighborhood.contains(n); });
        if (!next) throw Error(ErrorCode::kDescentStalled, "descent left the neighbourhood");
        cur = *next;
        configs.push_back(space.config(cur));
        ++steps;
        ++op_counters().elementary_steps;
    }
    return make_path(std::move(configs));
}

}  // namespace ctmp

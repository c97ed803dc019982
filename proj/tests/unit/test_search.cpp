#include <algorithm>
#include <vector>

#include "corpus.hpp"
#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/search/ara_star.hpp"
#include "ctmp/search/astar.hpp"
#include "ctmp/search/refine.hpp"
#include "ctmp/search/shortcut.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace ctmp;
using namespace ctmp::testing;

namespace {

Scenario open_grid(int n) { return make_grid(n, n, {}, Config{0, 0}, {{"r", cell_box(n - 2, n - 2, n - 1, n - 1)}}); }

/// Vertical wall at x = 4 from y = 0 to y = 6; the gap is at the top row.
Scenario walled_grid() {
    std::vector<Cell> wall;
    for (int y = 0; y <= 6; ++y) wall.push_back({4, y});
    return make_grid(8, 8, wall, Config{0, 0}, {{"r", cell_box(6, 0, 7, 1)}});
}

/// (0,0) -> (0,7) -> (7,7) -> (7,0): an expensive detour to (7,0).
Path corner_detour(int n) {
    std::vector<Config> q;
    for (int y = 0; y < n; ++y) q.push_back(Config{0, y});
    for (int x = 1; x < n; ++x) q.push_back(Config{x, n - 1});
    for (int y = n - 2; y >= 0; --y) q.push_back(Config{n - 1, y});
    return make_path(q);
}

std::vector<CostToGo> as_cost_to_go(std::initializer_list<std::pair<double, double>> gh) {
    std::vector<CostToGo> out;
    for (auto [g, h] : gh) out.push_back({g, h});
    return out;
}

}  // namespace

TEST_CASE("astar on an empty grid reaches the Manhattan bound") {
    const SearchResult r = astar(open_grid(8), Config{0, 0}, Config{3, 4}, 1.0);
    REQUIRE(r.found());
    CHECK(r.path.cost == 7.0);
    CHECK(r.path.front() == Config{0, 0});
    CHECK(r.path.back() == Config{3, 4});
    CHECK(path_is_valid(open_grid(8), r.path));
}

TEST_CASE("astar matches the BFS oracle around a wall") {
    const Scenario s = walled_grid();
    const auto dist = bfs_distances(s, Config{0, 0});
    const Lattice lat = make_lattice(s);
    const SearchResult r = astar(s, Config{0, 0}, Config{7, 0}, 1.0);
    REQUIRE(r.found());
    CHECK(r.path.cost == dist[lat.encode(Config{7, 0})]);
    CHECK(r.path.cost > 7.0);
}

TEST_CASE("astar reports NoPath and Timeout") {
    const Scenario s = open_grid(6);
    const SearchResult never = astar(s, Config{0, 0}, [](const Config&) { return false; }, 1.0);
    CHECK(never.status == SearchStatus::kNoPath);
    CHECK(never.expansions == 36);
    const SearchResult late = astar(s, Config{0, 0}, Config{5, 5}, 1.0, Deadline::at(Clock::now() - std::chrono::milliseconds(1)));
    CHECK(late.status == SearchStatus::kTimeout);
    std::vector<Cell> ring{{1, 0}, {0, 1}, {1, 1}};
    const Scenario boxed = make_grid(6, 6, ring, Config{0, 0}, {{"r", cell_box(4, 4, 5, 5)}});
    CHECK(astar(boxed, Config{0, 0}, Config{5, 5}, 1.0).status == SearchStatus::kNoPath);
    CHECK_THROWS_AS(astar(boxed, Config{1, 1}, Config{5, 5}, 1.0), Error);
}

TEST_CASE("astar is optimal with weight 1 and bounded with weight w") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Scenario s = random_grid(seed, 12, 12, 0.3);
        const Config goal = random_valid_config(s, seed * 7);
        const auto dist = bfs_distances(s, s.home);
        const int want = dist[make_lattice(s).encode(goal)];
        const SearchResult opt = astar(s, s.home, goal, 1.0);
        const SearchResult w3 = astar(s, s.home, goal, 3.0);
        if (want == kUnreached) {
            CHECK(opt.status == SearchStatus::kNoPath);
            continue;
        }
        REQUIRE(opt.found());
        CHECK(opt.path.cost == want);
        CHECK(path_is_valid(s, opt.path));
        REQUIRE(w3.found());
        CHECK(w3.path.cost <= 3.0 * want);
        CHECK(path_is_valid(s, w3.path));
    }
}

TEST_CASE("astar is deterministic") {
    const Scenario s = random_grid(77, 14, 14, 0.2);
    const Config goal = random_valid_config(s, 3);
    const SearchResult a = astar(s, s.home, goal, 2.0);
    const SearchResult b = astar(s, s.home, goal, 2.0);
    CHECK(a.path == b.path);
    CHECK(a.expansions == b.expansions);
}

TEST_CASE("epsilon_init") {
    const auto states = as_cost_to_go({{0, 6}, {4, 2}, {10, 0}});
    CHECK(epsilon_init(states, 10.0) == doctest::Approx(6.0 / 2.000001).epsilon(1e-12));
    // The goal term is (C - C) / delta = 0 and never wins.
    CHECK(epsilon_init(as_cost_to_go({{0, 10}, {10, 0}}), 10.0) == 1.0);
    CHECK(epsilon_init(as_cost_to_go({{0, 4}, {2, 2}, {4, 0}}), 4.0) == 1.0);
    CHECK_THROWS_AS(epsilon_init(as_cost_to_go({{0, 0}}), 0.0), Error);
}

TEST_CASE("epsilon_update takes the smaller of the two maxima") {
    // Path maximum 2.5, OPEN maximum 5.0.
    const auto path = as_cost_to_go({{0, 4}, {5, 2}, {10, 0}});
    const auto open = as_cost_to_go({{0, 2}, {9, 0.5}});
    const double delta = 1e-12;
    CHECK(epsilon_update(path, open, 10.0, delta) == doctest::Approx(2.5));
    CHECK(epsilon_update(open, path, 10.0, delta) == doctest::Approx(2.5));
    CHECK(epsilon_update(as_cost_to_go({{0, 10}, {10, 0}}), as_cost_to_go({{3, 9}}), 10.0) == 1.0);
    CHECK(epsilon_update(path, {}, 10.0, delta) == doctest::Approx(2.5));
}

TEST_CASE("epsilon schedule strictly decreases on a fixture") {
    // Replays the schedule with C fixed: an iteration at eps expands every
    // OPEN state with g + eps * h < C, then the update runs on what is left
    // and the path states are re-seeded.
    const double c = 10.0;
    const auto path = as_cost_to_go({{0, 8}, {4, 4}, {8, 1}, {10, 0}});
    std::vector<CostToGo> pool = as_cost_to_go({{1, 1}, {2, 2}, {1, 3}, {3, 3}, {0, 5}, {2, 6}, {0, 9.5}, {1, 8.5}});
    std::vector<CostToGo> open = pool;
    open.insert(open.end(), path.begin(), path.end());
    double eps = epsilon_init(path, c);
    std::vector<double> history{eps};
    for (int round = 0; round < 50 && eps > 1.0; ++round) {
        std::erase_if(open, [&](CostToGo s) { return s.g + eps * s.h < c; });
        // Non-empty OPEN only holds states with (C - g) / h <= eps here.
        const double next = open.empty() ? 1.0 : epsilon_update(path, open, c);
        CHECK(next < eps);
        eps = next;
        history.push_back(eps);
        open.insert(open.end(), path.begin(), path.end());
    }
    CHECK(history.back() == 1.0);
    CHECK(history.size() >= 3);
}

TEST_CASE("anytime_refine converges from a detour") {
    const Scenario s = open_grid(8);
    const Path detour = corner_detour(8);
    REQUIRE(path_is_valid(s, detour));
    CHECK(detour.cost == 21.0);
    const RefineOutcome out =
        anytime_refine(s, Config{0, 0}, Config{7, 0}, detour, Clock::now(), Millis(10000), {.record_paths = true});
    CHECK(out.path.cost == 7.0);
    CHECK(out.report.optimal);
    CHECK(out.report.epsilon_history.back() == 1.0);
    CHECK(out.report.initial_cost == 21.0);
    CHECK(out.report.max_expansions_per_state <= 1);
    CHECK(path_is_valid(s, out.path));
    CHECK(out.path.front() == Config{0, 0});
    CHECK(out.path.back() == Config{7, 0});
    for (std::size_t i = 1; i < out.report.epsilon_history.size(); ++i) {
        CHECK(out.report.epsilon_history[i] < out.report.epsilon_history[i - 1]);
        CHECK(out.report.iteration_costs[i] <= out.report.iteration_costs[i - 1]);
    }
    REQUIRE(out.report.iteration_paths.size() == out.report.iterations.size());
    for (const Path& p : out.report.iteration_paths) CHECK(path_is_valid(s, p));
    for (const RefineIteration& it : out.report.iterations) {
        if (it.epsilon > 1.0) CHECK(it.expansion_guaranteed);
    }
}

TEST_CASE("anytime_refine with no budget returns the initial path") {
    const Scenario s = open_grid(8);
    const Path detour = corner_detour(8);
    const RefineOutcome out = anytime_refine(s, Config{0, 0}, Config{7, 0}, detour, Clock::now() - std::chrono::milliseconds(5), Millis(1));
    CHECK(out.path == detour);
    CHECK(out.report.deadline_hit);
    CHECK_FALSE(out.report.optimal);
    CHECK(out.report.epsilon_history.empty());
}

TEST_CASE("anytime_refine matches the optimal cost on random grids") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const int n = seed % 2 ? 8 : 12;
        const Scenario s = random_grid(seed, n, n, 0.25);
        const Config goal = random_valid_config(s, seed + 1);
        const SearchResult opt = astar(s, s.home, goal, 1.0);
        if (!opt.found()) continue;
        const SearchResult rough = astar(s, s.home, goal, 10.0);
        REQUIRE(rough.found());
        const RefineOutcome out = anytime_refine(s, s.home, goal, rough.path, Clock::now(), Millis(10000));
        CHECK(out.path.cost == opt.path.cost);
        CHECK(out.report.optimal);
        CHECK(out.path.cost <= rough.path.cost);
        CHECK(path_is_valid(s, out.path));
        for (std::size_t i = 1; i < out.report.epsilon_history.size(); ++i) {
            CHECK(out.report.epsilon_history[i] < out.report.epsilon_history[i - 1]);
        }
    }
}

TEST_CASE("anytime_refine handles a path that revisits states") {
    const Scenario s = open_grid(5);
    const Path loop = make_path({Config{0, 0}, Config{1, 0}, Config{0, 0}, Config{0, 1}, Config{1, 1}});
    const RefineOutcome out = anytime_refine(s, Config{0, 0}, Config{1, 1}, loop, Clock::now(), Millis(1000));
    CHECK(out.path.cost == 2.0);
    CHECK(out.report.optimal);
}

TEST_CASE("anytime_refine collapses a closed loop to the zero-length path") {
    const Scenario s = open_grid(5);
    const Path loop = make_path({Config{1, 1}, Config{2, 1}, Config{2, 2}, Config{1, 2}, Config{1, 1}});
    RefineOptions opts;
    opts.record_paths = true;
    const RefineOutcome out = anytime_refine(s, Config{1, 1}, Config{1, 1}, loop, Clock::now(), Millis(1000), opts);
    CHECK(out.path.size() == 1);
    CHECK(out.path.cost == 0.0);
    CHECK(out.report.optimal);
    REQUIRE(out.report.epsilon_history == std::vector<double>{1.0});
    CHECK(out.report.iteration_costs == std::vector<double>{0.0});
    CHECK(out.report.iteration_paths.size() == 1);
}

TEST_CASE("anytime_refine rejects a path with the wrong endpoints") {
    const Scenario s = open_grid(5);
    const Path p = make_path({Config{0, 0}, Config{1, 0}});
    CHECK_THROWS_AS(anytime_refine(s, Config{0, 0}, Config{2, 0}, p, Clock::now(), Millis(10)), Error);
}

TEST_CASE("ARA* baseline") {
    const Scenario s = walled_grid();
    const int opt = static_cast<int>(astar(s, Config{0, 0}, Config{7, 0}, 1.0).path.cost);
    const AraResult r = ara_star(s, Config{0, 0}, Config{7, 0}, 50.0, 5.0, Deadline::never());
    REQUIRE(r.status == SearchStatus::kFound);
    REQUIRE_FALSE(r.profile.empty());
    CHECK(r.profile.front().weight == 50.0);
    CHECK(r.profile.front().cost <= 50.0 * opt);
    CHECK(r.profile.back().weight == 1.0);
    CHECK(r.path.cost == opt);
    CHECK(r.optimal);
    CHECK(path_is_valid(s, r.path));
    for (std::size_t i = 1; i < r.profile.size(); ++i) {
        CHECK(r.profile[i].weight < r.profile[i - 1].weight);
        CHECK(r.profile[i].cost <= r.profile[i - 1].cost);
    }
    CHECK(ara_star(s, Config{0, 0}, Config{7, 0}, 50.0, 5.0, Deadline::at(Clock::now())).status ==
          SearchStatus::kTimeout);
    CHECK_THROWS_AS(ara_star(s, Config{0, 0}, Config{7, 0}, 0.5, 5.0, Deadline::never()), Error);
    CHECK_THROWS_AS(ara_star(s, Config{0, 0}, Config{7, 0}, 5.0, 0.0, Deadline::never()), Error);
}

TEST_CASE("ARA* converges to the optimum on random grids") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        const Scenario s = random_grid(seed, 12, 12, 0.25);
        const Config goal = random_valid_config(s, seed);
        const SearchResult opt = astar(s, s.home, goal, 1.0);
        const AraResult r = ara_star(s, s.home, goal, 50.0, 5.0, Deadline::never());
        if (!opt.found()) {
            CHECK(r.status == SearchStatus::kNoPath);
            continue;
        }
        REQUIRE(r.status == SearchStatus::kFound);
        CHECK(r.path.cost == opt.path.cost);
    }
}

TEST_CASE("lattice_line walks a unit-step straight segment") {
    const Scenario s = open_grid(8);
    const auto line = lattice_line(s, Config{0, 0}, Config{3, 2});
    CHECK(line.size() == 6);
    CHECK(line.front() == Config{0, 0});
    CHECK(line.back() == Config{3, 2});
    CHECK(path_is_valid(s, make_path(line)));
    Scenario arm = random_arm(1, 16, 0);
    const auto wrap = lattice_line(arm, Config{14, 1}, Config{1, 15});
    CHECK(wrap.size() == 6);
    CHECK(path_is_valid(arm, make_path(wrap)));
}

TEST_CASE("shortcutting") {
    const Scenario s = open_grid(8);
    SUBCASE("an L-shaped detour gets shorter") {
        const Path detour = corner_detour(8);
        const ShortcutResult r = shortcut_path(s, detour, Deadline::never(), 7);
        CHECK(r.path.cost < detour.cost);
        CHECK(r.path.cost >= 7.0);
        CHECK(path_is_valid(s, r.path));
        CHECK(r.path.front() == detour.front());
        CHECK(r.path.back() == detour.back());
        CHECK_FALSE(r.improvements.empty());
    }
    SUBCASE("an optimal straight path is left alone") {
        const Path straight = make_path(lattice_line(s, Config{0, 0}, Config{7, 0}));
        const ShortcutResult r = shortcut_path(s, straight, Deadline::never(), 7);
        CHECK(r.path == straight);
        CHECK(r.improvements.empty());
    }
    SUBCASE("fixed seeds reproduce the output") {
        const Scenario g = random_grid(31, 12, 12, 0.15);
        const Config goal = random_valid_config(g, 2);
        const SearchResult rough = astar(g, g.home, goal, 20.0);
        REQUIRE(rough.found());
        const ShortcutResult a = shortcut_path(g, rough.path, Deadline::never(), 99);
        const ShortcutResult b = shortcut_path(g, rough.path, Deadline::never(), 99);
        CHECK(a.path == b.path);
        CHECK(a.trials == b.trials);
        CHECK(path_is_valid(g, a.path));
    }
}

TEST_CASE("path helpers") {
    const Scenario s = open_grid(4);
    const Path a = make_path({Config{0, 0}, Config{1, 0}});
    const Path b = make_path({Config{1, 0}, Config{1, 1}});
    const Path ab = concatenate(a, b);
    CHECK(ab.size() == 3);
    CHECK(ab.cost == 2.0);
    CHECK(reversed(ab).front() == Config{1, 1});
    CHECK_THROWS_AS(concatenate(b, b), Error);
    CHECK(check_path(s, make_path({Config{0, 0}, Config{1, 1}})).has_value());
    Path wrong = a;
    wrong.cost = 5.0;
    CHECK(check_path(s, wrong).has_value());
    CHECK_FALSE(check_path(s, ab).has_value());
}

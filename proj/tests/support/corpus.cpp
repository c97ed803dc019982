#include "corpus.hpp"

#include <numbers>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/rng.hpp"

namespace ctmp::testing {

Obstacle cell_block(int x, int y) { return Rect{{x + 0.25, y + 0.25}, {x + 0.75, y + 0.75}}; }

Rect cell_box(int x0, int y0, int x1, int y1) { return Rect{{x0 + 0.25, y0 + 0.25}, {x1 + 0.75, y1 + 0.75}}; }

Scenario make_grid(int width, int height, const std::vector<Cell>& blocked, Config home,
                   std::vector<RegionSpec> regions) {
    Scenario s;
    s.name = "grid";
    s.kind = DomainKind::kGrid;
    s.grid = {width, height};
    for (const Cell& c : blocked) s.obstacles.push_back(cell_block(c.x, c.y));
    s.home = std::move(home);
    s.regions = std::move(regions);
    return s;
}

Scenario random_grid(std::uint64_t seed, int width, int height, double density) {
    Rng rng(seed);
    const int hx = static_cast<int>(rng.uniform_index(width));
    const int hy = static_cast<int>(rng.uniform_index(height));
    std::vector<Cell> blocked;
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) {
            if (x == hx && y == hy) continue;
            if (rng.uniform_real(0.0, 1.0) < density) blocked.push_back({x, y});
        }
    }
    auto region_at = [&](const std::string& id) {
        const int w = std::min(3, width);
        const int h = std::min(3, height);
        const int x0 = static_cast<int>(rng.uniform_index(width - w + 1));
        const int y0 = static_cast<int>(rng.uniform_index(height - h + 1));
        return RegionSpec{id, cell_box(x0, y0, x0 + w - 1, y0 + h - 1)};
    };
    std::vector<RegionSpec> regions{region_at("pick"), region_at("place")};
    Scenario s = make_grid(width, height, blocked, Config{hx, hy}, std::move(regions));
    s.name = "random-grid-" + std::to_string(seed);
    return s;
}

Scenario random_arm(std::uint64_t seed, int joints_per_rev, int obstacles) {
    Rng rng(seed);
    Scenario s;
    s.name = "random-arm-" + std::to_string(seed);
    s.kind = DomainKind::kArm;
    s.arm.link_lengths = {1.0, 0.8};
    s.arm.joints_per_rev = joints_per_rev;
    s.arm.link_radius = 0.02;
    s.home = Config{joints_per_rev / 4, 0};
    s.regions = {RegionSpec{"pick", Rect{{0.9, -1.0}, {1.8, -0.2}}},
                 RegionSpec{"place", Rect{{-1.8, 0.2}, {-0.9, 1.0}}}};
    while (static_cast<int>(s.obstacles.size()) < obstacles) {
        const double r = rng.uniform_real(0.08, 0.25);
        const double rho = rng.uniform_real(0.5, 1.9);
        const double phi = rng.uniform_real(0.0, 2.0 * std::numbers::pi);
        s.obstacles.push_back(Circle{{rho * std::cos(phi), rho * std::sin(phi)}, r});
        if (!is_valid(s, s.home)) s.obstacles.pop_back();
    }
    return s;
}

Scenario trap_grid(int size, int clutter, std::uint64_t seed) {
    const int lo = size / 6;
    const int hi = size - size / 6;
    Scenario s;
    s.name = "trap-" + std::to_string(size);
    s.kind = DomainKind::kGrid;
    s.grid = {size, size};
    // Cup open towards y = 0; walls are two cells thick.
    s.obstacles.push_back(Rect{{double(lo), double(hi)}, {double(hi + 2), double(hi + 2)}});
    s.obstacles.push_back(Rect{{double(lo), double(lo)}, {double(lo + 2), double(hi + 2)}});
    s.obstacles.push_back(Rect{{double(hi), double(lo)}, {double(hi + 2), double(hi + 2)}});
    s.home = Config{size / 2, lo + (hi - lo) / 8};
    const int top = hi + (size - hi) / 2;
    s.regions = {RegionSpec{"pick", cell_box(lo / 2, top, lo / 2 + 3, top + 3)},
                 RegionSpec{"place", cell_box(size - lo / 2 - 4, top, size - lo / 2 - 1, top + 3)}};
    Rng rng(seed);
    while (static_cast<int>(s.obstacles.size()) < 3 + clutter) {
        const int x = static_cast<int>(rng.uniform_index(size));
        const int y = static_cast<int>(rng.uniform_index(size));
        const bool inside_cup = x >= lo - 2 && x <= hi + 3 && y >= lo - 2 && y <= hi + 3;
        const bool near_region = y >= top - 3 && y <= top + 7;
        if (inside_cup || near_region) continue;
        s.obstacles.push_back(cell_block(x, y));
    }
    return s;
}

Config random_valid_config(const Scenario& scenario, std::uint64_t seed) {
    const Lattice lat = make_lattice(scenario);
    Rng rng(seed);
    for (int tries = 0; tries < 100000; ++tries) {
        const Config q = lat.decode(static_cast<StateId>(rng.uniform_index(lat.size())));
        if (is_valid(scenario, q)) return q;
    }
    throw Error(ErrorCode::kInvalidScenario, "no valid configuration found");
}

}  // namespace ctmp::testing

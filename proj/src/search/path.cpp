#include "ctmp/search/path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"

namespace ctmp {

Path make_path(std::vector<Config> configs) {
    Path p;
    p.cost = configs.empty() ? 0.0 : static_cast<double>(configs.size() - 1) * StateSpace::edge_cost();
    p.configs = std::move(configs);
    return p;
}

Path reversed(const Path& path) {
    Path out = path;
    std::reverse(out.configs.begin(), out.configs.end());
    return out;
}

Path concatenate(const Path& a, const Path& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.back() != b.front()) {
        throw Error(ErrorCode::kInvalidPath, "concatenation junction mismatch");
    }
    Path out = a;
    out.configs.insert(out.configs.end(), b.configs.begin() + 1, b.configs.end());
    out.cost = a.cost + b.cost;
    return out;
}

std::optional<std::string> check_path(const Scenario& scenario, const Path& path) {
    if (path.empty()) return "empty path";
    const StateSpace space(scenario);
    const Lattice& lat = space.lattice();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Config& q = path.configs[i];
        if (!lat.contains(q)) return "config " + std::to_string(i) + " is off the lattice";
        if (!space.valid(space.id(q))) return "config " + std::to_string(i) + " (" + to_string(q) + ") collides";
        if (i == 0) continue;
        const Config& prev = path.configs[i - 1];
        int moved = 0;
        int step = 0;
        for (std::size_t d = 0; d < lat.dof(); ++d) {
            const int diff = lat.delta(prev.coords[d], q.coords[d], d);
            if (diff != 0) {
                ++moved;
                step = std::abs(diff);
            }
        }
        if (moved != 1 || step != 1) {
            return "configs " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not lattice neighbours";
        }
    }
    const double expected = static_cast<double>(path.size() - 1) * StateSpace::edge_cost();
    if (std::abs(expected - path.cost) > 1e-9) return "recorded cost does not match edge sum";
    return std::nullopt;
}

}  // namespace ctmp

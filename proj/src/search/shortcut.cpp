#include "ctmp/search/shortcut.hpp"

#include <cstdlib>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/rng.hpp"

namespace ctmp {

std::vector<Config> lattice_line(const Scenario& scenario, const Config& a, const Config& b) {
    const Lattice lat = make_lattice(scenario);
    const std::size_t n = lat.dof();
    std::vector<int> delta(n);
    long total = 0;
    for (std::size_t d = 0; d < n; ++d) {
        delta[d] = lat.delta(a.coords[d], b.coords[d], d);
        total += std::abs(delta[d]);
    }
    std::vector<Config> out;
    out.reserve(static_cast<std::size_t>(total) + 1);
    out.push_back(a);
    std::vector<long> done(n, 0);
    Config cur = a;
    for (long t = 1; t <= total; ++t) {
        // Advance the dimension lagging furthest behind its share t/total.
        std::size_t pick = n;
        double worst = -1.0;
        for (std::size_t d = 0; d < n; ++d) {
            const long need = std::abs(delta[d]);
            if (done[d] == need) continue;
            const double lag = static_cast<double>(need) * t / static_cast<double>(total) - static_cast<double>(done[d]);
            if (lag > worst) {
                worst = lag;
                pick = d;
            }
        }
        ++done[pick];
        int c = cur.coords[pick] + (delta[pick] > 0 ? 1 : -1);
        const int dim = lat.dims()[pick];
        if (c < 0) c += dim;
        if (c >= dim) c -= dim;
        cur.coords[pick] = c;
        out.push_back(cur);
    }
    return out;
}

ShortcutResult shortcut_path(const Scenario& scenario, const Path& path, Deadline deadline, std::uint64_t seed,
                             int patience) {
    const auto t0 = Clock::now();
    ShortcutResult result{path, {}, 0};
    Rng rng(seed);
    const StateSpace space(scenario);
    int failures = 0;
    while (failures < patience && !deadline.passed()) {
        std::vector<Config>& cfgs = result.path.configs;
        if (cfgs.size() < 3) break;
        ++result.trials;
        std::size_t i = rng.uniform_index(cfgs.size());
        std::size_t j = rng.uniform_index(cfgs.size());
        if (i > j) std::swap(i, j);
        if (j - i < 2) {
            ++failures;
            continue;
        }
        const std::vector<Config> line = lattice_line(scenario, cfgs[i], cfgs[j]);
        const std::size_t old_edges = j - i;
        const std::size_t new_edges = line.size() - 1;
        bool ok = new_edges < old_edges;
        for (std::size_t k = 1; ok && k + 1 < line.size(); ++k) ok = space.valid(space.id(line[k]));
        if (!ok) {
            ++failures;
            continue;
        }
        std::vector<Config> next(cfgs.begin(), cfgs.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), line.begin(), line.end());
        next.insert(next.end(), cfgs.begin() + static_cast<std::ptrdiff_t>(j) + 1, cfgs.end());
        result.path = make_path(std::move(next));
        result.improvements.push_back({elapsed_ms(t0), result.path.cost});
        failures = 0;
    }
    return result;
}

}  // namespace ctmp

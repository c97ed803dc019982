#include "ctmp/preprocess/preprocess.hpp"

#include <algorithm>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/preprocess/neighborhood.hpp"
#include "ctmp/search/astar.hpp"

namespace ctmp {

namespace {

void erase_sorted(std::vector<StateId>& sorted, const std::vector<StateId>& remove_sorted) {
    std::vector<StateId> kept;
    kept.reserve(sorted.size());
    std::set_difference(sorted.begin(), sorted.end(), remove_sorted.begin(), remove_sorted.end(),
                        std::back_inserter(kept));
    sorted = std::move(kept);
}

std::uint64_t region_seed(std::uint64_t seed, std::size_t region_index) {
    // splitmix64 finaliser keeps per-region streams decorrelated.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (region_index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::optional<StateId> sample_valid_uncovered(const std::vector<StateId>& uncovered,
                                              const std::vector<StateId>& frontier, Rng& rng) {
    if (uncovered.empty()) return std::nullopt;
    std::vector<StateId> candidates;
    for (StateId s : frontier) {
        if (std::binary_search(uncovered.begin(), uncovered.end(), s)) candidates.push_back(s);
    }
    const std::vector<StateId>& pool = candidates.empty() ? uncovered : candidates;
    return pool[rng.uniform_index(pool.size())];
}

std::vector<StateId> enumerate_region(const Scenario& scenario, const RegionSpec& region) {
    const StateSpace space(scenario);
    std::vector<StateId> out;
    for (StateId s = 0; s < space.size(); ++s) {
        // Cheap box test first; only candidates pay for a collision check.
        if (!region.box.contains(end_effector(scenario, space.config(s)))) continue;
        if (space.valid(s)) out.push_back(s);
    }
    return out;
}

RegionCover preprocess_region(const Scenario& scenario, std::size_t region_index, std::uint64_t seed) {
    const StateSpace space(scenario);
    const RegionSpec& region = scenario.regions.at(region_index);
    RegionCover cover;
    cover.region_id = region.id;

    const std::vector<StateId> region_states = enumerate_region(scenario, region);
    std::vector<StateId> uncovered = region_states;
    std::vector<StateId> frontier;
    Rng rng(region_seed(seed, region_index));

    while (const auto sample = sample_valid_uncovered(uncovered, frontier, rng)) {
        const StateId attractor_id = *sample;
        const Config attractor = space.config(attractor_id);
        SearchResult plan = astar(scenario, scenario.home, attractor, kOfflinePlannerWeight);
        if (!plan.found()) {
            cover.excluded.insert(std::upper_bound(cover.excluded.begin(), cover.excluded.end(), attractor_id),
                                  attractor_id);
            erase_sorted(uncovered, {attractor_id});
            continue;
        }
        NeighborhoodBuild build = construct_neighborhood(scenario, attractor);
        CoverEntry entry;
        entry.attractor = attractor;
        std::set_intersection(build.neighborhood.members.begin(), build.neighborhood.members.end(),
                              region_states.begin(), region_states.end(), std::back_inserter(entry.region_members));
        entry.neighborhood = std::move(build.neighborhood);
        entry.rep_paths.push_back(std::move(plan.path));
        erase_sorted(uncovered, entry.region_members);
        frontier = std::move(build.frontier);
        cover.entries.push_back(std::move(entry));
    }
    return cover;
}

Library preprocess(const Scenario& scenario, std::uint64_t seed) {
    validate_structure(scenario);
    if (!is_valid(scenario, scenario.home)) {
        throw Error(ErrorCode::kHomeInvalid, "home (" + to_string(scenario.home) + ") is in collision");
    }
    std::vector<RegionCover> regions;
    regions.reserve(scenario.regions.size());
    for (std::size_t r = 0; r < scenario.regions.size(); ++r) regions.push_back(preprocess_region(scenario, r, seed));
    return Library(fingerprint(scenario), make_lattice(scenario), scenario.home, std::move(regions));
}

}  // namespace ctmp

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctmp/cspace/scenario.hpp"
#include "ctmp/preprocess/library.hpp"
#include "ctmp/rng.hpp"

namespace ctmp {

/// Weight of the offline planner that computes representative paths.
inline constexpr double kOfflinePlannerWeight = 3.0;

/// Next attractor candidate. Prefers uncovered states on the frontier of the
/// last neighbourhood, otherwise draws uniformly from all uncovered states.
/// `uncovered` must be sorted. Returns nullopt when nothing is left.
std::optional<StateId> sample_valid_uncovered(const std::vector<StateId>& uncovered,
                                              const std::vector<StateId>& frontier, Rng& rng);

/// Valid lattice states whose end-effector lies in the region, sorted.
std::vector<StateId> enumerate_region(const Scenario& scenario, const RegionSpec& region);

/// Cover for one region. Each region is independent and seeded separately,
/// so regions can be built concurrently.
RegionCover preprocess_region(const Scenario& scenario, std::size_t region_index, std::uint64_t seed);

/// Builds the cover of every region: repeatedly pick an uncovered in-region
/// state, plan a representative path from home (weighted A*), grow the
/// greedy-descent neighbourhood around it and mark its in-region members
/// covered. States without a path from home go to the exclusion set.
/// Throws Error{kHomeInvalid} if home collides.
Library preprocess(const Scenario& scenario, std::uint64_t seed = 0);

}  // namespace ctmp

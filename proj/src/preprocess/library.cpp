#include "ctmp/preprocess/library.hpp"

#include <algorithm>

namespace ctmp {

Library::Library(std::uint64_t scenario_fingerprint, Lattice lattice, Config home, std::vector<RegionCover> regions)
    : fingerprint_(scenario_fingerprint),
      lattice_(std::move(lattice)),
      home_(std::move(home)),
      regions_(std::move(regions)) {
    std::uint32_t next_id = 0;
    for (std::uint32_t r = 0; r < regions_.size(); ++r) {
        for (std::uint32_t e = 0; e < regions_[r].entries.size(); ++e) {
            const EntryRef ref{r, e, next_id++};
            refs_.push_back(ref);
            for (StateId s : regions_[r].entries[e].region_members) goal_index_.try_emplace(s, ref);
        }
    }
}

std::optional<EntryRef> Library::find(StateId goal) const {
    const auto it = goal_index_.find(goal);
    if (it == goal_index_.end()) return std::nullopt;
    return it->second;
}

bool Library::is_excluded(StateId s) const {
    return std::any_of(regions_.begin(), regions_.end(), [s](const RegionCover& r) {
        return std::binary_search(r.excluded.begin(), r.excluded.end(), s);
    });
}

std::vector<StateId> Library::covered_goals() const {
    std::vector<StateId> out;
    out.reserve(goal_index_.size());
    for (const auto& [s, ref] : goal_index_) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ctmp

#include "ctmp/query/potential_index.hpp"

namespace ctmp {

const char* to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::kHome: return "HOME";
        case Provenance::kOnRepPath: return "ON_REP_PATH";
        case Provenance::kInGoalRegion: return "IN_GOAL_REGION";
        case Provenance::kOnExecutedPath: return "ON_EXECUTED_PATH";
    }
    return "UNKNOWN";
}

PotentialStateIndex::PotentialStateIndex(const Library& library)
    : library_(&library), home_(library.lattice().encode(library.home())) {
    for (std::uint32_t g = 0; g < library.entry_count(); ++g) {
        const CoverEntry& e = library.entry(library.ref(g));
        const Path& rep = e.rep_paths.front();
        for (std::uint32_t i = 0; i < rep.size(); ++i) {
            rep_states_.try_emplace(library.lattice().encode(rep.configs[i]),
                                    PotentialState{Provenance::kOnRepPath, g, i});
        }
    }
}

std::optional<PotentialState> PotentialStateIndex::lookup(StateId s) const {
    if (library_ == nullptr) return std::nullopt;
    if (s == home_) return PotentialState{Provenance::kHome, 0, 0};
    if (const auto it = rep_states_.find(s); it != rep_states_.end()) return it->second;
    if (const auto ref = library_->find(s)) return PotentialState{Provenance::kInGoalRegion, ref->global_id, 0};
    if (const auto it = executed_pos_.find(s); it != executed_pos_.end()) {
        return PotentialState{Provenance::kOnExecutedPath, 0, it->second};
    }
    return std::nullopt;
}

void PotentialStateIndex::update(std::vector<StateId> executed) {
    executed_ = std::move(executed);
    executed_pos_.clear();
    for (std::uint32_t i = 0; i < executed_.size(); ++i) executed_pos_.try_emplace(executed_[i], i);
}

}  // namespace ctmp

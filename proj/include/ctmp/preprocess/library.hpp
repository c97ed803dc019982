#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/preprocess/neighborhood.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

/// One neighbourhood of a region's cover with its representative path(s)
/// from home to the attractor. A single path per entry for now; the list
/// leaves room for per-payload path variants.
struct CoverEntry {
    Config attractor;
    Neighborhood neighborhood;
    /// Members of the neighbourhood that lie in this entry's region, sorted.
    std::vector<StateId> region_members;
    std::vector<Path> rep_paths;

    bool operator==(const CoverEntry&) const = default;
};

struct RegionCover {
    std::string region_id;
    std::vector<CoverEntry> entries;
    /// In-region valid states with no path from home, sorted.
    std::vector<StateId> excluded;

    bool operator==(const RegionCover&) const = default;
};

struct EntryRef {
    std::uint32_t region = 0;
    std::uint32_t entry = 0;
    /// Position in region-major order; overlaps resolve to the lowest id.
    std::uint32_t global_id = 0;

    bool operator==(const EntryRef&) const = default;
};

/// Preprocessing output: per-region covers plus a goal lookup table
/// (in-region state -> lowest covering entry). Immutable after construction.
class Library {
public:
    Library() = default;
    Library(std::uint64_t scenario_fingerprint, Lattice lattice, Config home, std::vector<RegionCover> regions);

    [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }
    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] const Config& home() const noexcept { return home_; }
    [[nodiscard]] const std::vector<RegionCover>& regions() const noexcept { return regions_; }
    [[nodiscard]] std::size_t entry_count() const noexcept { return refs_.size(); }

    /// Pure hash lookup; no collision checks.
    [[nodiscard]] std::optional<EntryRef> find(StateId goal) const;
    [[nodiscard]] const CoverEntry& entry(const EntryRef& ref) const {
        return regions_[ref.region].entries[ref.entry];
    }
    [[nodiscard]] const EntryRef& ref(std::uint32_t global_id) const { return refs_.at(global_id); }
    [[nodiscard]] bool is_excluded(StateId s) const;

    /// Every covered in-region state, sorted.
    [[nodiscard]] std::vector<StateId> covered_goals() const;

    bool operator==(const Library& o) const {
        return fingerprint_ == o.fingerprint_ && lattice_ == o.lattice_ && home_ == o.home_ && regions_ == o.regions_;
    }

private:
    std::uint64_t fingerprint_ = 0;
    Lattice lattice_;
    Config home_;
    std::vector<RegionCover> regions_;
    std::vector<EntryRef> refs_;
    std::unordered_map<StateId, EntryRef> goal_index_;
};

}  // namespace ctmp

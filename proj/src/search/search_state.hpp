#pragma once

// Shared bookkeeping for the lattice searches (A*, ARA*, anytime refinement).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "ctmp/cspace/state_space.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr StateId kNoParent = std::numeric_limits<StateId>::max();

struct OpenEntry {
    double f;
    double g;
    StateId id;
};

/// Orders entries so the heap top has the smallest f, then the largest g,
/// then the smallest id (= lexicographically smallest config).
struct WorseEntry {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const noexcept {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;
        return a.id > b.id;
    }
};

/// Per-run search state over a dense lattice. OPEN is a lazy binary heap:
/// stale entries (state left OPEN, or its g improved since the push) are
/// skipped on pop.
class SearchState {
public:
    explicit SearchState(std::size_t n)
        : g_(n, kInf), parent_(n, kNoParent), in_open_(n, 0), closed_(n, 0), in_incons_(n, 0) {}

    double g(StateId s) const { return g_[s]; }
    StateId parent(StateId s) const { return parent_[s]; }
    void set(StateId s, double g, StateId parent) {
        g_[s] = g;
        parent_[s] = parent;
    }

    bool in_open(StateId s) const { return in_open_[s] != 0; }
    bool closed(StateId s) const { return closed_[s] != 0; }
    bool in_incons(StateId s) const { return in_incons_[s] != 0; }

    void push_open(StateId s, double f) {
        if (!in_open_[s]) {
            in_open_[s] = 1;
            open_members_.push_back(s);
        }
        heap_.push({f, g_[s], s});
    }

    /// Pops the best live entry; returns false when OPEN is empty.
    bool pop_open(StateId& out) {
        while (!heap_.empty()) {
            const OpenEntry top = heap_.top();
            heap_.pop();
            if (!in_open_[top.id] || top.g != g_[top.id]) continue;
            in_open_[top.id] = 0;
            out = top.id;
            return true;
        }
        return false;
    }

    /// Best live f without removing it; kInf when OPEN is empty.
    double peek_f() {
        while (!heap_.empty()) {
            const OpenEntry& top = heap_.top();
            if (in_open_[top.id] && top.g == g_[top.id]) return top.f;
            heap_.pop();
        }
        return kInf;
    }

    void close(StateId s) {
        closed_[s] = 1;
        closed_members_.push_back(s);
    }

    void add_incons(StateId s) {
        if (!in_incons_[s]) {
            in_incons_[s] = 1;
            incons_members_.push_back(s);
        }
    }

    /// Live OPEN members (compacts the membership list).
    const std::vector<StateId>& open_states() {
        std::erase_if(open_members_, [this](StateId s) { return !in_open_[s]; });
        return open_members_;
    }

    const std::vector<StateId>& closed_states() const { return closed_members_; }

    /// Empties CLOSED.
    void clear_closed() {
        for (StateId s : closed_members_) closed_[s] = 0;
        closed_members_.clear();
    }

    /// Moves INCONS into OPEN membership (priorities are rebuilt separately).
    void merge_incons_into_open() {
        for (StateId s : incons_members_) {
            in_incons_[s] = 0;
            if (!in_open_[s]) {
                in_open_[s] = 1;
                open_members_.push_back(s);
            }
        }
        incons_members_.clear();
    }

    void add_open_member(StateId s) {
        if (!in_open_[s]) {
            in_open_[s] = 1;
            open_members_.push_back(s);
        }
    }

    /// Rebuilds the heap for a new inflation. heuristic(s) must return h(s).
    template <typename H>
    void rebuild_open(double weight, H&& heuristic) {
        std::vector<OpenEntry> entries;
        const auto& members = open_states();
        entries.reserve(members.size());
        for (StateId s : members) entries.push_back({g_[s] + weight * heuristic(s), g_[s], s});
        heap_ = std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseEntry>(WorseEntry{}, std::move(entries));
    }

    /// Follows parent pointers from s back to the root.
    Path extract(const StateSpace& space, StateId s) const {
        std::vector<Config> rev;
        for (StateId cur = s; cur != kNoParent; cur = parent_[cur]) rev.push_back(space.config(cur));
        std::reverse(rev.begin(), rev.end());
        return make_path(std::move(rev));
    }

private:
    std::vector<double> g_;
    std::vector<StateId> parent_;
    std::vector<std::uint8_t> in_open_;
    std::vector<std::uint8_t> closed_;
    std::vector<std::uint8_t> in_incons_;
    std::vector<StateId> open_members_;
    std::vector<StateId> closed_members_;
    std::vector<StateId> incons_members_;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseEntry> heap_;
};

}  // namespace ctmp::detail

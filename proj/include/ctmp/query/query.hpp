#pragma once

#include <optional>
#include <vector>

#include "ctmp/cspace/counters.hpp"
#include "ctmp/cspace/scenario.hpp"
#include "ctmp/cspace/state_space.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/preprocess/library.hpp"
#include "ctmp/query/potential_index.hpp"
#include "ctmp/search/deadline.hpp"
#include "ctmp/search/path.hpp"
#include "ctmp/search/refine.hpp"

namespace ctmp {

struct QueryRequest {
    Config start;
    Config goal;
    Millis t_bound{500.0};
    bool refine = true;
    RefineOptions refine_options;
};

struct QueryResult {
    Path path;
    /// Lookup-and-connect path, before refinement.
    Path initial_path;
    double initial_cost = 0.0;
    double final_cost = 0.0;
    double lookup_ms = 0.0;
    double connect_ms = 0.0;
    double refine_ms = 0.0;
    std::vector<double> eps_history;
    bool optimal = false;
    RefineReport refine_report;
    /// Work done before refinement started.
    OpCounters initial_ops;
};

/// Entry covering q together with its representative path from home.
struct RepPathMatch {
    EntryRef ref;
    const CoverEntry* entry = nullptr;
    Path path;
};

/// Pure table lookup (lowest entry id on overlap); nullopt when uncovered.
/// Copying the representative path counts one elementary step per config.
std::optional<RepPathMatch> find_rep_path(const Library& library, const Config& q);

enum class ConnectMode {
    kMembership,  // certified descent, no collision checks
    kChecked,     // re-validates every move against the scenario
};

/// rep_path extended by the reversed greedy descent from q, i.e. home -> q.
/// Throws Error{kDescentStalled} when the descent cannot be completed (in
/// checked mode this is how a stale library shows up).
Path connect(const StateSpace& space, const CoverEntry& entry, const Path& rep_path, const Config& q,
             ConnectMode mode = ConnectMode::kMembership);

/// Online side of the planner for one robot. The scenario and library must
/// outlive it. If the scenario no longer matches the library's fingerprint,
/// connections fall back to checked mode and failures become kStaleLibrary.
class Planner {
public:
    Planner(const Scenario& scenario, const Library& library);

    /// Errors: kInvalidConfig, kGoalUncovered, kStartNotPotential, kStaleLibrary.
    QueryResult query(const QueryRequest& request) const;

    /// Path from home to a potential state, rebuilt without planning.
    Path path_home_to(const Config& s) const;

    /// Makes every state of `executed` a valid start for the next query.
    void update_potential_index(const Path& executed);

    [[nodiscard]] const PotentialStateIndex& index() const noexcept { return index_; }
    [[nodiscard]] bool certified() const noexcept { return certified_; }
    [[nodiscard]] const StateSpace& space() const noexcept { return space_; }
    [[nodiscard]] const Library& library() const noexcept { return *library_; }

private:
    Path home_to_goal(const Config& goal) const;
    Path home_to_covered(const Config& q, ErrorCode uncovered_code) const;

    const Scenario* scenario_;
    const Library* library_;
    StateSpace space_;
    PotentialStateIndex index_;
    bool certified_;
};

}  // namespace ctmp

#include "ctmp/query/query.hpp"

#include "ctmp/errors.hpp"
#include "ctmp/preprocess/neighborhood.hpp"

namespace ctmp {

std::optional<RepPathMatch> find_rep_path(const Library& library, const Config& q) {
    if (!library.lattice().contains(q)) return std::nullopt;
    const auto ref = library.find(library.lattice().encode(q));
    if (!ref) return std::nullopt;
    RepPathMatch match;
    match.ref = *ref;
    match.entry = &library.entry(*ref);
    match.path = match.entry->rep_paths.front();
    op_counters().elementary_steps += match.path.size();
    return match;
}

Path connect(const StateSpace& space, const CoverEntry& entry, const Path& rep_path, const Config& q,
             ConnectMode mode) {
    Path descent = mode == ConnectMode::kMembership
                       ? descend_within(space, entry.neighborhood, q)
                       : descend(space.scenario(), q, entry.attractor, entry.neighborhood.max_descent_steps);
    return concatenate(rep_path, reversed(descent));
}

Planner::Planner(const Scenario& scenario, const Library& library)
    : scenario_(&scenario),
      library_(&library),
      space_(scenario),
      index_(library),
      certified_(fingerprint(scenario) == library.fingerprint()) {
    if (!(space_.lattice() == library.lattice())) {
        throw Error(ErrorCode::kFingerprintMismatch, "library lattice does not match the scenario");
    }
}

Path Planner::home_to_covered(const Config& q, ErrorCode uncovered_code) const {
    auto match = find_rep_path(*library_, q);
    if (!match) throw Error(uncovered_code, "(" + to_string(q) + ") is not covered by the library");
    if (certified_) return connect(space_, *match->entry, match->path, q, ConnectMode::kMembership);
    // Scenario changed since preprocessing: trust nothing without checking.
    if (const auto problem = check_path(*scenario_, match->path)) {
        throw Error(ErrorCode::kStaleLibrary, "representative path no longer valid: " + *problem);
    }
    try {
        return connect(space_, *match->entry, match->path, q, ConnectMode::kChecked);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::kDescentStalled || e.code() == ErrorCode::kBoundExceeded) {
            throw Error(ErrorCode::kStaleLibrary, e.what());
        }
        throw;
    }
}

Path Planner::home_to_goal(const Config& goal) const { return home_to_covered(goal, ErrorCode::kGoalUncovered); }

Path Planner::path_home_to(const Config& s) const {
    const auto not_potential = [&] {
        return Error(ErrorCode::kStartNotPotential, "(" + to_string(s) + ") is not a potential state");
    };
    if (!library_->lattice().contains(s)) throw not_potential();
    const StateId id = library_->lattice().encode(s);
    const auto prov = index_.lookup(id);
    if (!prov) throw not_potential();
    switch (prov->kind) {
        case Provenance::kHome:
            ++op_counters().elementary_steps;
            return make_path({library_->home()});
        case Provenance::kOnRepPath: {
            const Path& rep = library_->entry(library_->ref(prov->entry_id)).rep_paths.front();
            std::vector<Config> prefix(rep.configs.begin(), rep.configs.begin() + prov->position + 1);
            op_counters().elementary_steps += prefix.size();
            return make_path(std::move(prefix));
        }
        case Provenance::kInGoalRegion:
            return home_to_covered(s, ErrorCode::kStartNotPotential);
        case Provenance::kOnExecutedPath: {
            // Walk back along the executed path to its end, which the
            // library reaches on its own.
            const std::vector<StateId>& exec = index_.executed();
            const Config end = library_->lattice().decode(exec.back());
            const auto end_prov = index_.lookup(exec.back());
            if (!end_prov || end_prov->kind == Provenance::kOnExecutedPath) throw not_potential();
            const Path to_end = path_home_to(end);
            std::vector<Config> back;
            back.reserve(exec.size() - prov->position);
            for (std::size_t i = exec.size(); i-- > prov->position;) back.push_back(library_->lattice().decode(exec[i]));
            op_counters().elementary_steps += back.size();
            return concatenate(to_end, make_path(std::move(back)));
        }
    }
    throw not_potential();
}

void Planner::update_potential_index(const Path& executed) {
    std::vector<StateId> ids;
    ids.reserve(executed.size());
    for (const Config& q : executed.configs) ids.push_back(library_->lattice().encode(q));
    index_.update(std::move(ids));
}

QueryResult Planner::query(const QueryRequest& request) const {
    const Clock::time_point t_start = Clock::now();
    const OpCounters before = op_counters();
    if (!(request.t_bound.count() > 0.0)) throw Error(ErrorCode::kInvalidConfig, "T_bound must be positive");
    for (const Config* q : {&request.start, &request.goal}) {
        if (!space_.lattice().contains(*q)) {
            throw Error(ErrorCode::kInvalidConfig, "(" + to_string(*q) + ") is not on the lattice");
        }
    }

    QueryResult result;
    Clock::time_point t = Clock::now();
    auto goal_match = find_rep_path(*library_, request.goal);
    if (!goal_match) {
        throw Error(ErrorCode::kGoalUncovered, "goal (" + to_string(request.goal) + ") is not covered");
    }
    result.lookup_ms = elapsed_ms(t);

    t = Clock::now();
    // The lookup above already paid for the copy; connect reuses it.
    Path home_goal;
    if (certified_) {
        home_goal = connect(space_, *goal_match->entry, goal_match->path, request.goal, ConnectMode::kMembership);
    } else {
        op_counters().elementary_steps -= goal_match->path.size();
        home_goal = home_to_goal(request.goal);
    }
    Path initial = home_goal;
    if (request.start != library_->home()) {
        const Path home_start = path_home_to(request.start);
        initial = concatenate(reversed(home_start), home_goal);
    }
    result.connect_ms = elapsed_ms(t);

    result.initial_ops = op_counters() - before;
    result.initial_path = initial;
    result.initial_cost = initial.cost;

    if (request.refine) {
        t = Clock::now();
        RefineOutcome refined = anytime_refine(*scenario_, request.start, request.goal, initial, t_start,
                                               request.t_bound, request.refine_options);
        result.refine_ms = elapsed_ms(t);
        result.path = std::move(refined.path);
        result.eps_history = refined.report.epsilon_history;
        result.optimal = refined.report.optimal;
        result.refine_report = std::move(refined.report);
    } else {
        result.path = std::move(initial);
    }
    result.final_cost = result.path.cost;
    return result;
}

}  // namespace ctmp

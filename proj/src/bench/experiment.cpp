#include "ctmp/bench/experiment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "ctmp/bench/results.hpp"
#include "ctmp/cspace/scenario_io.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/preprocess/library_io.hpp"
#include "ctmp/preprocess/preprocess.hpp"
#include "ctmp/query/query.hpp"
#include "ctmp/rng.hpp"
#include "ctmp/search/ara_star.hpp"
#include "ctmp/search/astar.hpp"
#include "ctmp/search/shortcut.hpp"
#include "json.hpp"

namespace ctmp {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct PlannerNameEntry {
    PlannerKind kind;
    const char* name;
};

constexpr PlannerNameEntry kPlannerNames[] = {
    {PlannerKind::kCtmp, "ctmp"},     {PlannerKind::kCtmpRefine, "ctmp+refine"},
    {PlannerKind::kCtmpShortcut, "ctmp+shortcut"}, {PlannerKind::kAstar, "astar"},
    {PlannerKind::kWastar, "wastar"}, {PlannerKind::kArastar, "arastar"},
};

bool is_ctmp(PlannerKind k) {
    return k == PlannerKind::kCtmp || k == PlannerKind::kCtmpRefine || k == PlannerKind::kCtmpShortcut;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    if (p.empty()) return {};
    const std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

/// Per-trial seed for the shortcut baseline; depends only on (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint32_t trial) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1));
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    return z ^ (z >> 33);
}

class TrialRunner {
public:
    TrialRunner(const ExperimentConfig& config, const Scenario& scenario, const Library& library)
        : config_(config), scenario_(scenario), library_(library) {
        for (PlannerKind k : config.planners) {
            if (is_ctmp(k)) planners_.emplace(k, std::make_unique<Planner>(scenario, library));
        }
    }

    /// Runs every configured planner on one instance, in configuration order.
    void run_instance(std::uint32_t trial, const Config& start, const Config& goal, double budget_ms,
                      std::vector<TrialRecord>& out) {
        const SearchResult oracle = astar(scenario_, start, goal, 1.0);
        for (PlannerKind k : config_.planners) {
            TrialRecord rec = run(k, trial, start, goal, budget_ms);
            if (oracle.found()) rec.oracle_cost = oracle.path.cost;
            if (rec.success && is_ctmp(k) && config_.mode == ExperimentMode::kSequential) {
                planners_.at(k)->update_potential_index(rec.path);
            }
            out.push_back(std::move(rec));
        }
    }

private:
    TrialRecord run(PlannerKind kind, std::uint32_t trial, const Config& start, const Config& goal,
                    double budget_ms) {
        TrialRecord rec;
        rec.trial_id = trial;
        rec.planner = kind;
        rec.start = start;
        rec.goal = goal;
        rec.budget_ms = budget_ms;
        const Millis budget(budget_ms);
        const Clock::time_point t0 = Clock::now();
        const Deadline deadline = Deadline::at(t0 + std::chrono::duration_cast<Clock::duration>(budget));
        try {
            switch (kind) {
                case PlannerKind::kCtmp:
                case PlannerKind::kCtmpRefine:
                case PlannerKind::kCtmpShortcut: run_ctmp(rec, kind, deadline); break;
                case PlannerKind::kAstar:
                case PlannerKind::kWastar: {
                    const double w = kind == PlannerKind::kAstar ? 1.0 : config_.wastar_weight;
                    SearchResult r = astar(scenario_, start, goal, w, deadline);
                    if (!r.found()) throw Error(r.status == SearchStatus::kTimeout ? ErrorCode::kTimeout : ErrorCode::kNoPath,
                                                to_string(r.status));
                    rec.path = std::move(r.path);
                    rec.optimal = w == 1.0;
                    rec.profile.push_back({elapsed_ms(t0), rec.path.cost, w});
                    break;
                }
                case PlannerKind::kArastar: {
                    AraResult r = ara_star(scenario_, start, goal, config_.arastar_initial_weight,
                                           config_.arastar_weight_step, deadline);
                    if (r.status != SearchStatus::kFound) {
                        throw Error(r.status == SearchStatus::kTimeout ? ErrorCode::kTimeout : ErrorCode::kNoPath,
                                    to_string(r.status));
                    }
                    for (const AraIteration& it : r.profile) rec.profile.push_back({it.elapsed_ms, it.cost, it.weight});
                    rec.n_iterations = static_cast<std::uint32_t>(r.profile.size());
                    rec.final_epsilon = r.profile.back().weight;
                    rec.optimal = r.optimal;
                    rec.path = std::move(r.path);
                    break;
                }
            }
            rec.success = true;
        } catch (const Error& e) {
            rec.error = std::string(error_code_name(e.code()));
        }
        rec.plan_ms = elapsed_ms(t0);
        if (rec.success) {
            rec.cost = rec.path.cost;
            if (!is_ctmp(kind)) rec.initial_cost = rec.profile.empty() ? rec.cost : rec.profile.front().cost;
            // Independent re-validation of whatever the planner returned.
            if (check_path(scenario_, rec.path) || rec.path.front() != start || rec.path.back() != goal) {
                rec.success = false;
                rec.error = std::string(error_code_name(ErrorCode::kInvalidPath));
            }
        }
        return rec;
    }

    void run_ctmp(TrialRecord& rec, PlannerKind kind, const Deadline& deadline) {
        const Clock::time_point t0 = Clock::now();
        QueryRequest req;
        req.start = rec.start;
        req.goal = rec.goal;
        req.t_bound = Millis(rec.budget_ms);
        req.refine = kind == PlannerKind::kCtmpRefine;
        req.refine_options.record_paths = req.refine;
        QueryResult q = planners_.at(kind)->query(req);
        rec.initial_cost = q.initial_cost;
        rec.profile.push_back({q.lookup_ms + q.connect_ms, q.initial_cost, kNan});
        if (req.refine) {
            const RefineReport& report = q.refine_report;
            for (const RefineIteration& it : report.iterations) rec.profile.push_back({it.elapsed_ms, it.cost, it.epsilon});
            rec.n_iterations = static_cast<std::uint32_t>(report.iterations.size());
            if (!report.epsilon_history.empty()) rec.final_epsilon = report.epsilon_history.back();
            rec.epsilon_history = report.epsilon_history;
            rec.iteration_costs = report.iteration_costs;
            rec.refine_deadline_hit = report.deadline_hit;
            for (const Path& p : report.iteration_paths) {
                if (check_path(scenario_, p) || p.front() != rec.start || p.back() != rec.goal) {
                    throw Error(ErrorCode::kInvalidPath, "refinement produced an invalid intermediate path");
                }
            }
            rec.optimal = q.optimal;
        }
        rec.path = std::move(q.path);
        if (kind == PlannerKind::kCtmpShortcut) {
            const double offset = elapsed_ms(t0);
            ShortcutResult sr = shortcut_path(scenario_, rec.path, deadline, trial_seed(config_.seed, rec.trial_id));
            for (const ShortcutSample& s : sr.improvements) rec.profile.push_back({offset + s.elapsed_ms, s.cost, kNan});
            rec.path = std::move(sr.path);
        }
    }

    const ExperimentConfig& config_;
    const Scenario& scenario_;
    const Library& library_;
    std::map<PlannerKind, std::unique_ptr<Planner>> planners_;
};

double draw_budget(const ExperimentConfig& config, Rng& rng) {
    if (!config.budget_range_ms) return config.budget_ms;
    const auto [lo, hi] = *config.budget_range_ms;
    const auto span = static_cast<std::uint64_t>(std::floor(hi) - std::ceil(lo)) + 1;
    return std::ceil(lo) + static_cast<double>(rng.uniform_index(span));
}

std::vector<StateId> region_goals(const Library& library, std::size_t region) {
    std::set<StateId> goals;
    for (const CoverEntry& e : library.regions().at(region).entries) {
        goals.insert(e.region_members.begin(), e.region_members.end());
    }
    return {goals.begin(), goals.end()};
}

}  // namespace

const char* planner_name(PlannerKind planner) noexcept {
    for (const auto& e : kPlannerNames) {
        if (e.kind == planner) return e.name;
    }
    return "unknown";
}

std::optional<PlannerKind> parse_planner(std::string_view name) {
    for (const auto& e : kPlannerNames) {
        if (name == e.name) return e.kind;
    }
    return std::nullopt;
}

std::optional<double> TrialRecord::suboptimality() const {
    if (!success || !oracle_cost) return std::nullopt;
    if (*oracle_cost == 0.0) return 1.0;
    return cost / *oracle_cost;
}

ExperimentConfig parse_experiment_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    const auto bad = [](const std::string& why) { return Error(ErrorCode::kInvalidConfig, why); };
    ExperimentConfig c;
    try {
        const json j = json::parse(json_text);
        const int version = j.value("format_version", kExperimentFormatVersion);
        if (version != kExperimentFormatVersion) {
            throw Error(ErrorCode::kUnsupportedVersion, "experiment format_version " + std::to_string(version));
        }
        c.scenario = resolve(base_dir, j.at("scenario").get<std::string>());
        c.library = resolve(base_dir, j.value("library", std::string()));
        c.output_dir = resolve(base_dir, j.value("output_dir", std::string("results")));
        const std::string mode = j.value("mode", std::string("single"));
        if (mode == "single") {
            c.mode = ExperimentMode::kSingle;
        } else if (mode == "sequential") {
            c.mode = ExperimentMode::kSequential;
        } else {
            throw bad("unknown mode '" + mode + "'");
        }
        c.trials = j.value("trials", 1);
        c.budget_ms = j.value("budget_ms", 500.0);
        if (j.contains("budget_range_ms")) {
            const auto r = j.at("budget_range_ms").get<std::vector<double>>();
            if (r.size() != 2 || !(r[0] > 0.0) || r[1] < r[0] || std::floor(r[1]) < std::ceil(r[0])) {
                throw bad("budget_range_ms must be [lo, hi] with 0 < lo <= hi");
            }
            c.budget_range_ms = std::pair{r[0], r[1]};
        }
        for (const auto& name : j.at("planners")) {
            const auto p = parse_planner(name.get<std::string>());
            if (!p) throw bad("unknown planner '" + name.get<std::string>() + "'");
            c.planners.push_back(*p);
        }
        c.seed = j.value("seed", std::uint64_t{0});
        c.deterministic_output = j.value("deterministic_output", false);
        c.wastar_weight = j.value("wastar_weight", 5.0);
        c.arastar_initial_weight = j.value("arastar_initial_weight", 50.0);
        c.arastar_weight_step = j.value("arastar_weight_step", 5.0);
    } catch (const json::exception& e) {
        throw bad(std::string("experiment config: ") + e.what());
    }
    if (c.trials < 1) throw bad("trials must be >= 1");
    if (!(c.budget_ms > 0.0)) throw bad("budget_ms must be positive");
    if (c.planners.empty()) throw bad("planner list is empty");
    if (std::set<PlannerKind>(c.planners.begin(), c.planners.end()).size() != c.planners.size()) {
        throw bad("planner listed twice");
    }
    if (!(c.wastar_weight >= 1.0) || !(c.arastar_initial_weight >= 1.0) || !(c.arastar_weight_step > 0.0)) {
        throw bad("planner weights out of range");
    }
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open experiment config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str(), path.parent_path());
}

SummaryStats summarize(const std::vector<TrialRecord>& records, const std::vector<PlannerKind>& planners) {
    // An instance counts as commonly solved when every planner succeeded on it.
    std::map<std::uint32_t, std::size_t> solved_by;
    for (const TrialRecord& r : records) {
        if (r.success) ++solved_by[r.trial_id];
    }
    SummaryStats stats;
    for (PlannerKind k : planners) {
        PlannerSummary s;
        s.planner = k;
        double cost_sum = 0.0, sub_sum = 0.0, t_sum = 0.0, t_sq = 0.0;
        std::uint32_t sub_n = 0;
        for (const TrialRecord& r : records) {
            if (r.planner != k) continue;
            ++s.trials;
            if (!r.success) continue;
            ++s.successes;
            t_sum += r.plan_ms;
            t_sq += r.plan_ms * r.plan_ms;
            if (solved_by[r.trial_id] != planners.size()) continue;
            ++s.common_solved;
            cost_sum += r.cost;
            if (const auto sub = r.suboptimality()) {
                sub_sum += *sub;
                ++sub_n;
            }
        }
        if (s.trials > 0) s.success_rate = 100.0 * s.successes / s.trials;
        if (s.common_solved > 0) s.mean_cost = cost_sum / s.common_solved;
        if (sub_n > 0) s.mean_suboptimality = sub_sum / sub_n;
        if (s.successes > 0) {
            s.mean_plan_ms = t_sum / s.successes;
            s.std_plan_ms = std::sqrt(std::max(0.0, t_sq / s.successes - s.mean_plan_ms * s.mean_plan_ms));
        }
        stats.planners.push_back(s);
    }
    return stats;
}

ExperimentResult run_single_experiment(const ExperimentConfig& config, const Scenario& scenario,
                                       const Library& library) {
    const std::vector<StateId> goals = library.covered_goals();
    if (goals.empty()) throw Error(ErrorCode::kGoalUncovered, "the library covers no goal states");
    Rng rng(config.seed);
    TrialRunner runner(config, scenario, library);
    ExperimentResult result;
    for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(config.trials); ++t) {
        const Config goal = library.lattice().decode(goals[rng.uniform_index(goals.size())]);
        const double budget = draw_budget(config, rng);
        runner.run_instance(t, scenario.home, goal, budget, result.records);
    }
    result.stats = summarize(result.records, config.planners);
    return result;
}

ExperimentResult run_sequential_experiment(const ExperimentConfig& config, const Scenario& scenario,
                                           const Library& library) {
    if (library.regions().size() < 2) {
        throw Error(ErrorCode::kInvalidConfig, "sequential mode needs at least two regions");
    }
    const std::vector<StateId> pick = region_goals(library, 0);
    const std::vector<StateId> place = region_goals(library, 1);
    if (pick.empty() || place.empty()) throw Error(ErrorCode::kGoalUncovered, "a chain region has no covered goals");
    Rng rng(config.seed);
    TrialRunner runner(config, scenario, library);
    ExperimentResult result;
    Config start = library.lattice().decode(pick[rng.uniform_index(pick.size())]);
    for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(config.trials); ++t) {
        const std::vector<StateId>& pool = t % 2 == 0 ? place : pick;
        const Config goal = library.lattice().decode(pool[rng.uniform_index(pool.size())]);
        const double budget = draw_budget(config, rng);
        runner.run_instance(t, start, goal, budget, result.records);
        start = goal;
    }
    result.stats = summarize(result.records, config.planners);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    const Scenario scenario = load_scenario(config.scenario);
    const Library library =
        config.library.empty() ? preprocess(scenario, config.seed) : load_library(config.library, scenario);
    ExperimentResult result = config.mode == ExperimentMode::kSingle
                                  ? run_single_experiment(config, scenario, library)
                                  : run_sequential_experiment(config, scenario, library);
    emit_results(result, config.planners, config.output_dir, config.deterministic_output);
    return result;
}

}  // namespace ctmp

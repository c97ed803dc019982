#include "ctmp/bench/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "ctmp/bench/experiment.hpp"
#include "ctmp/cspace/scenario_io.hpp"
#include "ctmp/errors.hpp"
#include "ctmp/preprocess/library_io.hpp"
#include "ctmp/preprocess/preprocess.hpp"
#include "ctmp/query/query.hpp"

namespace ctmp {

namespace {

std::string version_text() {
    return "ctmp 1.0.0 (scenario format " + std::to_string(kScenarioFormatVersion) + ", library format " +
           std::to_string(kLibraryFormatVersion) + ", experiment format " + std::to_string(kExperimentFormatVersion) +
           ")";
}

struct PreprocessArgs {
    std::string scenario;
    std::string out;
    std::uint64_t seed = 0;
};

struct QueryArgs {
    std::string scenario;
    std::string library;
    std::string start;
    std::string goal;
    double budget_ms = 500.0;
    bool no_refine = false;
};

void do_preprocess(const PreprocessArgs& a, std::ostream& out) {
    const Scenario scenario = load_scenario(a.scenario);
    const Library library = preprocess(scenario, a.seed);
    save_library(library, a.out);
    std::size_t excluded = 0;
    for (const RegionCover& r : library.regions()) excluded += r.excluded.size();
    out << "regions " << library.regions().size() << "\nentries " << library.entry_count() << "\ncovered "
        << library.covered_goals().size() << "\nexcluded " << excluded << "\nwrote " << a.out << '\n';
}

void do_query(const QueryArgs& a, std::ostream& out) {
    const Scenario scenario = load_scenario(a.scenario);
    const Library library = load_library(a.library, scenario);
    const Planner planner(scenario, library);
    QueryRequest req;
    req.start = a.start.empty() ? scenario.home : parse_config(a.start);
    req.goal = parse_config(a.goal);
    req.t_bound = Millis(a.budget_ms);
    req.refine = !a.no_refine;
    const QueryResult r = planner.query(req);
    out << "initial_cost " << r.initial_cost << "\nfinal_cost " << r.final_cost << "\noptimal " << (r.optimal ? 1 : 0)
        << "\nepsilon";
    for (double e : r.eps_history) out << ' ' << e;
    out << "\npath " << r.path.size() << '\n';
    for (const Config& q : r.path.configs) out << to_string(q) << '\n';
}

void do_bench(const std::string& config_path, std::ostream& out) {
    const ExperimentConfig config = load_experiment_config(config_path);
    const ExperimentResult result = run_experiment(config);
    out << "planner,success_rate,mean_cost,mean_suboptimality\n";
    for (const PlannerSummary& s : result.stats.planners) {
        out << planner_name(s.planner) << ',' << s.success_rate << ',' << s.mean_cost << ',' << s.mean_suboptimality
            << '\n';
    }
    out << "wrote " << config.output_dir.string() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constant-time motion planning with anytime refinement", "ctmp"};
    app.set_version_flag("--version", version_text());
    app.require_subcommand(1);

    PreprocessArgs pre;
    auto* pre_cmd = app.add_subcommand("preprocess", "Build a goal-region library for a scenario");
    pre_cmd->add_option("--scenario", pre.scenario, "Scenario JSON file")->required();
    pre_cmd->add_option("--out", pre.out, "Library file to write")->required();
    pre_cmd->add_option("--seed", pre.seed, "Attractor sampling seed");

    QueryArgs q;
    auto* query_cmd = app.add_subcommand("query", "Plan from a potential state to a covered goal");
    query_cmd->add_option("--scenario", q.scenario, "Scenario JSON file")->required();
    query_cmd->add_option("--library", q.library, "Library file")->required();
    query_cmd->add_option("--start", q.start, "Start configuration, e.g. \"3 4\" (default: home)");
    query_cmd->add_option("--goal", q.goal, "Goal configuration")->required();
    query_cmd->add_option("--budget-ms", q.budget_ms, "Planning time budget in milliseconds")
        ->check(CLI::PositiveNumber);
    query_cmd->add_flag("--no-refine", q.no_refine, "Return the initial path without refinement");

    std::string bench_config;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark experiment");
    bench_cmd->add_option("--config", bench_config, "Experiment config JSON")->required();

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed_args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (pre_cmd->parsed()) do_preprocess(pre, out);
        if (query_cmd->parsed()) do_query(q, out);
        if (bench_cmd->parsed()) do_bench(bench_config, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace ctmp

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctmp/cspace/config.hpp"
#include "ctmp/cspace/scenario.hpp"
#include "ctmp/preprocess/library.hpp"
#include "ctmp/search/path.hpp"

namespace ctmp {

inline constexpr int kExperimentFormatVersion = 1;

enum class ExperimentMode { kSingle, kSequential };

enum class PlannerKind { kCtmp, kCtmpRefine, kCtmpShortcut, kAstar, kWastar, kArastar };

const char* planner_name(PlannerKind planner) noexcept;
std::optional<PlannerKind> parse_planner(std::string_view name);

struct ExperimentConfig {
    std::filesystem::path scenario;
    /// Empty: preprocess the scenario in memory with `seed`.
    std::filesystem::path library;
    std::filesystem::path output_dir;
    ExperimentMode mode = ExperimentMode::kSingle;
    int trials = 1;
    double budget_ms = 500.0;
    /// Sequential mode: per-trial budget drawn uniformly (whole ms) from this range.
    std::optional<std::pair<double, double>> budget_range_ms;
    std::vector<PlannerKind> planners;
    std::uint64_t seed = 0;
    /// Leave wall-clock columns empty in trials.csv (timings go to timings.csv)
    /// so that repeated runs are byte-identical.
    bool deterministic_output = false;
    double wastar_weight = 5.0;
    double arastar_initial_weight = 50.0;
    double arastar_weight_step = 5.0;
};

/// Relative paths resolve against base_dir. Throws Error{kInvalidConfig}.
ExperimentConfig parse_experiment_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ProfileSample {
    double elapsed_ms = 0.0;
    double cost = 0.0;
    /// Inflation (refinement) or weight (ARA*) of the iteration; NaN when n/a.
    double epsilon = 0.0;
};

struct TrialRecord {
    std::uint32_t trial_id = 0;
    PlannerKind planner = PlannerKind::kCtmp;
    Config start;
    Config goal;
    double budget_ms = 0.0;
    bool success = false;
    double cost = 0.0;
    double plan_ms = 0.0;
    std::uint32_t n_iterations = 0;
    std::optional<double> final_epsilon;
    bool optimal = false;
    /// Cost before any improvement (ctmp variants); equals cost otherwise.
    double initial_cost = 0.0;
    std::optional<double> oracle_cost;
    std::string error;
    std::vector<ProfileSample> profile;
    /// Iteration costs and epsilons of refinement runs, for the schedule checks.
    std::vector<double> epsilon_history;
    std::vector<double> iteration_costs;
    bool refine_deadline_hit = false;
    Path path;

    [[nodiscard]] std::optional<double> suboptimality() const;
};

struct PlannerSummary {
    PlannerKind planner = PlannerKind::kCtmp;
    std::uint32_t trials = 0;
    std::uint32_t successes = 0;
    double success_rate = 0.0;  // percent
    /// Statistics below are over instances every planner solved.
    std::uint32_t common_solved = 0;
    double mean_cost = 0.0;
    double mean_suboptimality = 0.0;
    /// Over this planner's successful trials.
    double mean_plan_ms = 0.0;
    double std_plan_ms = 0.0;
};

struct SummaryStats {
    std::vector<PlannerSummary> planners;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    SummaryStats stats;
};

SummaryStats summarize(const std::vector<TrialRecord>& records, const std::vector<PlannerKind>& planners);

/// Queries from home to covered goals sampled uniformly (seeded), every
/// configured planner on the same (start, goal, budget).
ExperimentResult run_single_experiment(const ExperimentConfig& config, const Scenario& scenario,
                                       const Library& library);

/// Pick -> place -> pick chain: each trial starts at the previous trial's
/// goal, alternating between the first two regions.
ExperimentResult run_sequential_experiment(const ExperimentConfig& config, const Scenario& scenario,
                                           const Library& library);

/// Loads scenario and library (or preprocesses), runs the configured mode
/// and writes the result files.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace ctmp

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ctmp/bench/experiment.hpp"

namespace ctmp {

/// trials.csv header; the first eleven columns are the stable interface,
/// the rest are appended diagnostics.
inline constexpr const char* kTrialsHeader =
    "trial_id,planner,start,goal,budget_ms,success,cost,plan_ms,n_iterations,final_epsilon,optimal_flag,"
    "initial_cost,oracle_cost,suboptimality,error";

inline constexpr const char* kSummaryHeader =
    "planner,trials,successes,success_rate,common_solved,mean_cost,mean_suboptimality,mean_plan_ms,std_plan_ms";

/// `with_timing` false leaves plan_ms empty.
std::string trials_csv(const std::vector<TrialRecord>& records, bool with_timing);
std::string summary_csv(const SummaryStats& stats, bool with_timing);
std::string timings_csv(const std::vector<TrialRecord>& records);

/// Mean suboptimality against time, one polyline per planner with samples,
/// plus inflation labels along the refinement curve.
std::string anytime_profile_svg(const std::vector<TrialRecord>& records, const std::vector<PlannerKind>& planners);

/// Parses trials.csv back into records (profile and path are not stored).
/// Throws Error{kInvalidConfig} on malformed input.
std::vector<TrialRecord> parse_trials_csv(const std::string& text);

/// Writes trials.csv, summary.csv, anytime_profile.svg and, in
/// deterministic mode, timings.csv. Throws Error{kIo}.
void emit_results(const ExperimentResult& result, const std::vector<PlannerKind>& planners,
                  const std::filesystem::path& output_dir, bool deterministic_output);

}  // namespace ctmp

#include "ctmp/bench/results.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctmp/errors.hpp"

namespace ctmp {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fixed(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

const char* planner_color(PlannerKind k) {
    switch (k) {
        case PlannerKind::kCtmp: return "#1f77b4";
        case PlannerKind::kCtmpRefine: return "#d62728";
        case PlannerKind::kCtmpShortcut: return "#ff7f0e";
        case PlannerKind::kAstar: return "#2ca02c";
        case PlannerKind::kWastar: return "#9467bd";
        case PlannerKind::kArastar: return "#8c564b";
    }
    return "#000000";
}

/// Best cost a trial had found by time t, if any.
std::optional<double> cost_at(const TrialRecord& r, double t) {
    std::optional<double> best;
    for (const ProfileSample& s : r.profile) {
        if (s.elapsed_ms <= t && (!best || s.cost < *best)) best = s.cost;
    }
    return best;
}

}  // namespace

std::string trials_csv(const std::vector<TrialRecord>& records, bool with_timing) {
    std::ostringstream out;
    out << kTrialsHeader << '\n';
    for (const TrialRecord& r : records) {
        out << r.trial_id << ',' << planner_name(r.planner) << ',' << to_string(r.start) << ',' << to_string(r.goal)
            << ',' << num(r.budget_ms) << ',' << (r.success ? 1 : 0) << ',' << (r.success ? num(r.cost) : "") << ','
            << (with_timing ? fixed(r.plan_ms, 3) : "") << ',' << r.n_iterations << ',' << opt_num(r.final_epsilon)
            << ',' << (r.optimal ? 1 : 0) << ',' << (r.success ? num(r.initial_cost) : "") << ','
            << opt_num(r.oracle_cost) << ',' << opt_num(r.suboptimality()) << ',' << r.error << '\n';
    }
    return out.str();
}

std::string timings_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "trial_id,planner,plan_ms\n";
    for (const TrialRecord& r : records) {
        out << r.trial_id << ',' << planner_name(r.planner) << ',' << fixed(r.plan_ms, 3) << '\n';
    }
    return out.str();
}

std::string summary_csv(const SummaryStats& stats, bool with_timing) {
    std::ostringstream out;
    out << kSummaryHeader << '\n';
    for (const PlannerSummary& s : stats.planners) {
        out << planner_name(s.planner) << ',' << s.trials << ',' << s.successes << ',' << fixed(s.success_rate, 2)
            << ',' << s.common_solved << ',' << fixed(s.mean_cost, 4) << ',' << fixed(s.mean_suboptimality, 4) << ','
            << (with_timing ? fixed(s.mean_plan_ms, 3) : "") << ',' << (with_timing ? fixed(s.std_plan_ms, 3) : "")
            << '\n';
    }
    return out.str();
}

std::string anytime_profile_svg(const std::vector<TrialRecord>& records, const std::vector<PlannerKind>& planners) {
    constexpr double kW = 800, kH = 480, kLeft = 70, kRight = 170, kTop = 30, kBottom = 50;
    constexpr int kGrid = 80;

    double t_max = 1.0;
    for (const TrialRecord& r : records) {
        t_max = std::max(t_max, r.budget_ms);
        for (const ProfileSample& s : r.profile) t_max = std::max(t_max, s.elapsed_ms);
    }

    struct Curve {
        PlannerKind planner;
        std::vector<std::pair<double, double>> points;  // (time, mean suboptimality)
    };
    std::vector<Curve> curves;
    double y_max = 1.5;
    for (PlannerKind k : planners) {
        Curve c{k, {}};
        for (int i = 0; i <= kGrid; ++i) {
            const double t = t_max * i / kGrid;
            double sum = 0.0;
            int n = 0;
            for (const TrialRecord& r : records) {
                if (r.planner != k || !r.success || !r.oracle_cost || *r.oracle_cost <= 0.0) continue;
                if (const auto cost = cost_at(r, t)) {
                    sum += *cost / *r.oracle_cost;
                    ++n;
                }
            }
            if (n > 0) c.points.emplace_back(t, sum / n);
        }
        for (const auto& p : c.points) y_max = std::max(y_max, p.second);
        curves.push_back(std::move(c));
    }
    y_max = std::ceil(y_max * 4.0) / 4.0;

    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    auto sx = [&](double t) { return kLeft + pw * t / t_max; };
    auto sy = [&](double v) { return kTop + ph * (1.0 - (v - 1.0) / (y_max - 1.0)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 "
        << kW << ' ' << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kLeft << "\" y=\"18\">mean suboptimality vs. planning time</text>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double t = t_max * i / 4, v = 1.0 + (y_max - 1.0) * i / 4;
        out << "<text x=\"" << fixed(sx(t), 1) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
            << fixed(t, 0) << "</text>\n";
        out << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(sy(v) + 4, 1) << "\" text-anchor=\"end\">"
            << fixed(v, 2) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">time [ms]</text>\n";

    int legend = 0;
    for (const Curve& c : curves) {
        const char* color = planner_color(c.planner);
        const double ly = kTop + 10 + 18 * legend++;
        out << "<text x=\"" << kLeft + pw + 30 << "\" y=\"" << ly + 4 << "\" fill=\"" << color << "\">"
            << planner_name(c.planner) << "</text>\n";
        out << "<line x1=\"" << kLeft + pw + 8 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 26 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        if (c.points.empty()) continue;
        out << "<polyline class=\"planner\" data-planner=\"" << planner_name(c.planner) << "\" fill=\"none\" stroke=\""
            << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            out << (i ? " " : "") << fixed(sx(c.points[i].first), 1) << ',' << fixed(sy(c.points[i].second), 1);
        }
        out << "\"/>\n";
    }

    // Inflation labels: mean time and value of the i-th iteration.
    for (PlannerKind k : planners) {
        if (k != PlannerKind::kCtmpRefine && k != PlannerKind::kArastar) continue;
        const Curve& c = *std::find_if(curves.begin(), curves.end(), [&](const Curve& x) { return x.planner == k; });
        const std::size_t first_iter = k == PlannerKind::kCtmpRefine ? 1 : 0;
        for (std::size_t i = first_iter; i < first_iter + 6; ++i) {
            double t = 0.0, eps = 0.0;
            int n = 0;
            for (const TrialRecord& r : records) {
                if (r.planner != k || !r.success || r.profile.size() <= i) continue;
                t += r.profile[i].elapsed_ms;
                eps += r.profile[i].epsilon;
                ++n;
            }
            if (n == 0 || c.points.empty()) break;
            t /= n;
            eps /= n;
            auto near = std::lower_bound(c.points.begin(), c.points.end(), std::pair{t, -1.0});
            const double v = near == c.points.end() ? c.points.back().second : near->second;
            out << "<text class=\"epsilon\" x=\"" << fixed(sx(t) + 3, 1) << "\" y=\"" << fixed(sy(v) - 4, 1)
                << "\" font-size=\"10\" fill=\"" << planner_color(k) << "\">&#949;=" << fixed(eps, 2) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<TrialRecord> parse_trials_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || split(line, ',') != split(kTrialsHeader, ',')) {
        throw Error(ErrorCode::kInvalidConfig, "trials.csv header mismatch");
    }
    const std::size_t columns = split(kTrialsHeader, ',').size();
    std::vector<TrialRecord> out;
    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<double>(std::stod(s)); };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != columns) throw Error(ErrorCode::kInvalidConfig, "trials.csv row has wrong column count");
        TrialRecord r;
        try {
            r.trial_id = static_cast<std::uint32_t>(std::stoul(f[0]));
            const auto planner = parse_planner(f[1]);
            if (!planner) throw Error(ErrorCode::kInvalidConfig, "unknown planner " + f[1]);
            r.planner = *planner;
            r.start = parse_config(f[2]);
            r.goal = parse_config(f[3]);
            r.budget_ms = std::stod(f[4]);
            r.success = f[5] == "1";
            r.cost = opt(f[6]).value_or(0.0);
            r.plan_ms = opt(f[7]).value_or(0.0);
            r.n_iterations = static_cast<std::uint32_t>(std::stoul(f[8]));
            r.final_epsilon = opt(f[9]);
            r.optimal = f[10] == "1";
            r.initial_cost = opt(f[11]).value_or(0.0);
            r.oracle_cost = opt(f[12]);
            r.error = f[14];
        } catch (const std::logic_error& e) {
            throw Error(ErrorCode::kInvalidConfig, std::string("trials.csv: ") + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

void emit_results(const ExperimentResult& result, const std::vector<PlannerKind>& planners,
                  const std::filesystem::path& output_dir, bool deterministic_output) {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + output_dir.string() + ": " + ec.message());
    write_file(output_dir / "trials.csv", trials_csv(result.records, !deterministic_output));
    write_file(output_dir / "summary.csv", summary_csv(result.stats, !deterministic_output));
    write_file(output_dir / "anytime_profile.svg", anytime_profile_svg(result.records, planners));
    if (deterministic_output) write_file(output_dir / "timings.csv", timings_csv(result.records));
}

}  // namespace ctmp

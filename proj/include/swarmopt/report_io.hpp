#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swarmopt/harness.hpp"

namespace swarmopt::io {

using json = nlohmann::ordered_json;

/// Shortest decimal representation that parses back to the identical double.
inline std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

inline json config_to_json(const std::variant<abc::Config, fa::Config>& config) {
    json j;
    if (const auto* c = std::get_if<abc::Config>(&config)) {
        j["colony_size"] = c->colony_size;
        j["limit"] = c->limit;
        j["max_iterations"] = c->max_iterations;
    } else {
        const auto& f = std::get<fa::Config>(config);
        j["population"] = f.population;
        j["alpha"] = f.alpha;
        j["beta0"] = f.beta0;
        j["gamma"] = f.gamma;
        j["exponent_power"] = f.exponent_power;
        j["alpha_scaled_to_box"] = f.alpha_scaled_to_box;
        j["max_iterations"] = f.max_iterations;
    }
    return j;
}

inline json plan_to_json(const ExperimentPlan& plan) {
    json j;
    j["algorithm"] = plan.algorithm;
    j["config"] = config_to_json(plan.config);
    j["objective"] = {{"name", plan.objective_name}, {"dims", plan.dims}};
    j["bounds"] = {{"lower", plan.lower}, {"upper", plan.upper}};
    j["repetitions"] = plan.repetitions;
    j["base_seed"] = plan.base_seed;
    j["checkpoints"] = plan.checkpoints;
    return j;
}

inline ExperimentPlan plan_from_json(const json& j) {
    ExperimentPlan plan;
    plan.algorithm = j.at("algorithm").get<std::string>();
    const json& c = j.at("config");
    if (plan.algorithm == "abc") {
        abc::Config config;
        config.colony_size = c.at("colony_size").get<std::size_t>();
        config.limit = c.at("limit").get<std::uint64_t>();
        config.max_iterations = c.at("max_iterations").get<std::uint64_t>();
        plan.config = config;
    } else if (plan.algorithm == "fa") {
        fa::Config config;
        config.population = c.at("population").get<std::size_t>();
        config.alpha = c.at("alpha").get<double>();
        config.beta0 = c.at("beta0").get<double>();
        config.gamma = c.at("gamma").get<double>();
        config.exponent_power = c.at("exponent_power").get<int>();
        config.alpha_scaled_to_box = c.at("alpha_scaled_to_box").get<bool>();
        config.max_iterations = c.at("max_iterations").get<std::uint64_t>();
        plan.config = config;
    } else {
        throw std::invalid_argument("plan: unknown algorithm '" + plan.algorithm + "'");
    }
    plan.objective_name = j.at("objective").at("name").get<std::string>();
    plan.dims = j.at("objective").at("dims").get<std::size_t>();
    plan.lower = j.at("bounds").at("lower").get<std::vector<double>>();
    plan.upper = j.at("bounds").at("upper").get<std::vector<double>>();
    plan.repetitions = j.at("repetitions").get<std::uint64_t>();
    plan.base_seed = j.at("base_seed").get<std::uint64_t>();
    plan.checkpoints = j.at("checkpoints").get<std::vector<std::uint64_t>>();
    return plan;
}

/// Report as one JSON document. Wall-clock timing is not serialized so that
/// identical invocations produce byte-identical files.
inline json report_to_json(const ExperimentReport& report) {
    json j;
    j["plan"] = plan_to_json(report.plan);
    j["runs"] = json::array();
    for (const RunResult& run : report.runs) {
        json r;
        r["seed"] = run.seed;
        r["best_point"] = run.best_point;
        r["best_value"] = run.best_value;
        r["evaluations"] = run.evaluations;
        r["scout_count"] = run.scout_count;
        std::vector<std::uint64_t> iterations;
        std::vector<double> best;
        for (const TracePoint& p : run.trace.entries()) {
            iterations.push_back(p.iteration);
            best.push_back(p.best);
        }
        r["trace"] = {{"iteration", iterations}, {"best", best}};
        j["runs"].push_back(std::move(r));
    }
    j["checkpoint_stats"] = json::array();
    for (const CheckpointStats& s : report.checkpoint_stats)
        j["checkpoint_stats"].push_back(
            {{"checkpoint", s.checkpoint}, {"min", s.min}, {"median", s.median}, {"mean", s.mean}, {"std", s.std_dev}});
    j["total_evaluations"] = report.total_evaluations;
    return j;
}

inline ExperimentReport report_from_json(const json& j) {
    ExperimentReport report;
    report.plan = plan_from_json(j.at("plan"));
    for (const json& r : j.at("runs")) {
        RunResult run;
        run.algorithm = report.plan.algorithm;
        run.objective = report.plan.objective_name;
        run.seed = r.at("seed").get<std::uint64_t>();
        run.best_point = r.at("best_point").get<std::vector<double>>();
        run.best_value = r.at("best_value").get<double>();
        run.evaluations = r.at("evaluations").get<std::uint64_t>();
        run.scout_count = r.at("scout_count").get<std::uint64_t>();
        const auto iterations = r.at("trace").at("iteration").get<std::vector<std::uint64_t>>();
        const auto best = r.at("trace").at("best").get<std::vector<double>>();
        if (iterations.size() != best.size())
            throw std::invalid_argument("report: trace arrays have mismatched lengths");
        for (std::size_t i = 0; i < iterations.size(); ++i) run.trace.record(iterations[i], best[i]);
        report.runs.push_back(std::move(run));
    }
    for (const json& s : j.at("checkpoint_stats"))
        report.checkpoint_stats.push_back({s.at("checkpoint").get<std::uint64_t>(), s.at("min").get<double>(),
                                           s.at("median").get<double>(), s.at("mean").get<double>(),
                                           s.at("std").get<double>()});
    report.total_evaluations = j.at("total_evaluations").get<std::uint64_t>();
    return report;
}

namespace detail {

inline std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

} // namespace detail

inline void export_json(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = detail::open_for_write(path);
    out << report_to_json(report).dump(2) << '\n';
    if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

inline ExperimentReport import_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("cannot parse '" + path.string() + "': " + e.what());
    }
    return report_from_json(j);
}

/// Sibling path of the per-run trace CSV that carries the checkpoint summary.
inline std::filesystem::path summary_path(const std::filesystem::path& trace_path) {
    std::filesystem::path p = trace_path;
    p.replace_extension();
    p += ".summary.csv";
    return p;
}

/// Two files: per-run traces (`iteration,run_seed,best_so_far`) at `path`, and
/// the checkpoint summary (`checkpoint,min,median,mean,std`) at summary_path(path).
inline void export_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto traces = detail::open_for_write(path);
    traces << "iteration,run_seed,best_so_far\n";
    for (const RunResult& run : report.runs)
        for (const TracePoint& p : run.trace.entries())
            traces << p.iteration << ',' << run.seed << ',' << format_double(p.best) << '\n';
    if (!traces) throw std::runtime_error("failed while writing '" + path.string() + "'");

    auto summary = detail::open_for_write(summary_path(path));
    summary << "checkpoint,min,median,mean,std\n";
    for (const CheckpointStats& s : report.checkpoint_stats)
        summary << s.checkpoint << ',' << format_double(s.min) << ',' << format_double(s.median) << ','
                << format_double(s.mean) << ',' << format_double(s.std_dev) << '\n';
    if (!summary) throw std::runtime_error("failed while writing '" + summary_path(path).string() + "'");
}

enum class Format { csv, json };

inline void export_report(const ExperimentReport& report, Format format, const std::filesystem::path& path) {
    if (format == Format::json)
        export_json(report, path);
    else
        export_csv(report, path);
}

/// Median best-so-far per iteration (`iteration,median_best`), one row per
/// iteration 0..max_iterations — the convergence-diagram series for one
/// algorithm. Values at checkpoint iterations agree with the report's
/// statistics exactly (same median computation).
inline void emit_plot_data(const ExperimentReport& report, const std::filesystem::path& path) {
    if (report.runs.empty()) throw std::invalid_argument("emit_plot_data: report contains no runs");
    auto out = detail::open_for_write(path);
    out << "iteration,median_best\n";
    const std::uint64_t iterations = report.plan.max_iterations();
    for (std::uint64_t it = 0; it <= iterations; ++it) {
        std::vector<double> values;
        values.reserve(report.runs.size());
        for (const RunResult& run : report.runs) values.push_back(run.trace.value_at(it));
        out << it << ',' << format_double(swarmopt::detail::median_of(std::move(values))) << '\n';
    }
    if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

} // namespace swarmopt::io

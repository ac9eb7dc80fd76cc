#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "swarmopt/abc.hpp"
#include "swarmopt/benchmarks.hpp"
#include "swarmopt/core.hpp"
#include "swarmopt/firefly.hpp"

namespace swarmopt {

/// Everything needed to reproduce a multi-seed experiment. A plan is the sole
/// input of run_experiment; reports are pure functions of their plan.
struct ExperimentPlan {
    std::string algorithm; // "abc" | "fa", must match the config alternative
    std::variant<abc::Config, fa::Config> config;
    std::string objective_name;
    std::size_t dims = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::uint64_t repetitions = 30;
    std::uint64_t base_seed = 1;
    std::vector<std::uint64_t> checkpoints{20, 40, 60, 80, 100};

    std::uint64_t max_iterations() const {
        return std::visit([](const auto& c) { return c.max_iterations; }, config);
    }

    SearchSpace space() const { return SearchSpace(lower, upper); }

    bool operator==(const ExperimentPlan&) const = default;
};

inline void validate(const ExperimentPlan& plan) {
    if (plan.algorithm == "abc") {
        if (!std::holds_alternative<abc::Config>(plan.config))
            throw std::invalid_argument("plan: algorithm 'abc' requires an abc config");
        abc::validate(std::get<abc::Config>(plan.config));
    } else if (plan.algorithm == "fa") {
        if (!std::holds_alternative<fa::Config>(plan.config))
            throw std::invalid_argument("plan: algorithm 'fa' requires an fa config");
        fa::validate(std::get<fa::Config>(plan.config));
    } else {
        throw std::invalid_argument("plan: unknown algorithm '" + plan.algorithm + "' (expected abc or fa)");
    }
    if (plan.repetitions < 1) throw std::invalid_argument("plan: repetitions must be at least 1");
    if (plan.dims == 0) throw std::invalid_argument("plan: dims must be at least 1");
    if (plan.lower.size() != plan.dims || plan.upper.size() != plan.dims)
        throw std::invalid_argument("plan: bounds must have one entry per dimension");
    SearchSpace space(plan.lower, plan.upper); // validates bound ordering
    if (plan.checkpoints.empty()) throw std::invalid_argument("plan: checkpoints must be non-empty");
    for (std::size_t i = 0; i < plan.checkpoints.size(); ++i) {
        if (i > 0 && plan.checkpoints[i] <= plan.checkpoints[i - 1])
            throw std::invalid_argument("plan: checkpoints must be strictly increasing");
        if (plan.checkpoints[i] > plan.max_iterations())
            throw std::invalid_argument("plan: checkpoint " + std::to_string(plan.checkpoints[i]) +
                                        " exceeds max_iterations " + std::to_string(plan.max_iterations()));
    }
}

struct CheckpointStats {
    std::uint64_t checkpoint = 0;
    double min = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double std_dev = 0.0; // population standard deviation; 0 for a single run

    bool operator==(const CheckpointStats&) const = default;
};

namespace detail {

inline double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// Index-parallel map with a shared worker pool; results land in caller-owned
/// slots so assembly order is deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(n, hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

/// Order statistics of best-so-far at each checkpoint, over the given runs.
/// Pure function of the run list as a multiset: permuting runs changes nothing.
inline std::vector<CheckpointStats> compute_checkpoint_stats(const std::vector<RunResult>& runs,
                                                             std::span<const std::uint64_t> checkpoints) {
    if (runs.empty()) throw std::invalid_argument("compute_checkpoint_stats: no runs");
    std::vector<CheckpointStats> stats;
    stats.reserve(checkpoints.size());
    for (std::uint64_t cp : checkpoints) {
        std::vector<double> values;
        values.reserve(runs.size());
        for (const RunResult& run : runs) values.push_back(run.trace.value_at(cp));
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
        double variance = 0.0;
        for (double v : sorted) variance += (v - mean) * (v - mean);
        variance /= n;
        stats.push_back({cp, sorted.front(), detail::median_of(sorted), mean, std::sqrt(variance)});
    }
    return stats;
}

/// Plan echo, per-run results and checkpoint statistics. Wall time is
/// informational only and intentionally left out of serialized reports.
struct ExperimentReport {
    ExperimentPlan plan;
    std::vector<RunResult> runs;
    std::vector<CheckpointStats> checkpoint_stats;
    std::uint64_t total_evaluations = 0;
    double total_wall_time_seconds = 0.0;
};

/// Executes `repetitions` independent runs with per-repetition seeds derived
/// from the base seed. Repetitions run concurrently; each owns its RNG stream,
/// so the report is a pure function of the plan.
inline ExperimentReport run_experiment(const ExperimentPlan& plan,
                                       const benchmarks::FunctionRegistry& registry =
                                           benchmarks::FunctionRegistry::builtin()) {
    validate(plan);
    const ObjectiveSpec objective = registry.lookup(plan.objective_name, plan.dims);
    const SearchSpace space = plan.space();
    const auto start = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.plan = plan;
    report.runs.resize(plan.repetitions);
    detail::parallel_for(plan.repetitions, [&](std::size_t r) {
        const std::uint64_t seed = RngStream::derive_seed(plan.base_seed, r);
        report.runs[r] = plan.algorithm == "abc"
                             ? abc::run(std::get<abc::Config>(plan.config), objective, space, seed)
                             : fa::run(std::get<fa::Config>(plan.config), objective, space, seed);
    });

    report.checkpoint_stats = compute_checkpoint_stats(report.runs, plan.checkpoints);
    for (const RunResult& run : report.runs) report.total_evaluations += run.evaluations;
    report.total_wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Two-algorithm checkpoint table: one row per algorithm, cells are median
/// best-so-far, plus the winner (strictly smaller median) per checkpoint.
struct ComparisonTable {
    std::string objective_name;
    std::size_t dims = 0;
    std::vector<std::uint64_t> checkpoints;
    std::string algorithm_a;
    std::string algorithm_b;
    std::vector<double> medians_a;
    std::vector<double> medians_b;
    std::vector<std::string> winners; // algorithm name, or "tie"
};

inline ComparisonTable compare(const ExperimentReport& a, const ExperimentReport& b) {
    if (a.plan.objective_name != b.plan.objective_name)
        throw std::invalid_argument("compare: objective mismatch ('" + a.plan.objective_name + "' vs '" +
                                    b.plan.objective_name + "')");
    if (a.plan.dims != b.plan.dims)
        throw std::invalid_argument("compare: dims mismatch (" + std::to_string(a.plan.dims) + " vs " +
                                    std::to_string(b.plan.dims) + ")");
    if (a.plan.checkpoints != b.plan.checkpoints)
        throw std::invalid_argument("compare: checkpoint mismatch");

    ComparisonTable table;
    table.objective_name = a.plan.objective_name;
    table.dims = a.plan.dims;
    table.checkpoints = a.plan.checkpoints;
    table.algorithm_a = a.plan.algorithm;
    table.algorithm_b = b.plan.algorithm;
    for (std::size_t i = 0; i < table.checkpoints.size(); ++i) {
        const double ma = a.checkpoint_stats[i].median;
        const double mb = b.checkpoint_stats[i].median;
        table.medians_a.push_back(ma);
        table.medians_b.push_back(mb);
        if (ma < mb)
            table.winners.push_back(table.algorithm_a);
        else if (mb < ma)
            table.winners.push_back(table.algorithm_b);
        else
            table.winners.push_back("tie");
    }
    return table;
}

} // namespace swarmopt

// Acceptance suite: statistical checks of the benchmark protocol (pm30 box,
// population 50, 100 iterations) plus the hard property checks. Prints one
// PASS/FAIL line per criterion and exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "swarmopt/swarmopt.hpp"

using namespace swarmopt;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << id << (pass ? " PASS " : " FAIL ") << detail << std::endl;
}

ExperimentPlan protocol_plan(const std::string& algorithm, std::size_t dims, std::uint64_t base_seed) {
    ExperimentPlan plan;
    plan.algorithm = algorithm;
    if (algorithm == "abc")
        plan.config = abc::Config{.colony_size = 50, .limit = abc::default_limit(50, dims),
                                  .max_iterations = 100};
    else
        plan.config = fa::Config{}; // alpha 0.5, beta0 1, gamma 1, r^2 exponent, population 50
    plan.objective_name = "rastrigin";
    plan.dims = dims;
    plan.lower.assign(dims, -30.0);
    plan.upper.assign(dims, 30.0);
    plan.repetitions = 30;
    plan.base_seed = base_seed;
    plan.checkpoints = {20, 40, 60, 80, 100};
    return plan;
}

double median_at(const ExperimentReport& report, std::uint64_t checkpoint) {
    for (const CheckpointStats& s : report.checkpoint_stats)
        if (s.checkpoint == checkpoint) return s.median;
    throw std::logic_error("checkpoint not found");
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

int main() {
    std::vector<ExperimentReport> all_reports; // pooled for the trace and budget sweeps

    // C1: ABC on 2-D rastrigin, 30 repetitions.
    {
        const ExperimentReport r = run_experiment(protocol_plan("abc", 2, 1001));
        const double median = median_at(r, 100);
        const double secs = r.total_wall_time_seconds;
        report("C1", median <= 0.5 && secs < 10.0,
               "abc/f1 median@100=" + fmt(median) + " (<= 0.5), time=" + fmt(secs) + "s (< 10s)");
        all_reports.push_back(r);
    }

    // C2: ABC on 3-D rastrigin.
    {
        const ExperimentReport r = run_experiment(protocol_plan("abc", 3, 1002));
        const double median = median_at(r, 100);
        const double secs = r.total_wall_time_seconds;
        report("C2", median <= 1.0 && secs < 15.0,
               "abc/f2 median@100=" + fmt(median) + " (<= 1.0), time=" + fmt(secs) + "s (< 15s)");
        all_reports.push_back(r);
    }

    // C3: FA with the default constants on 2-D rastrigin.
    {
        const ExperimentReport r = run_experiment(protocol_plan("fa", 2, 1003));
        const double median = median_at(r, 100);
        const double secs = r.total_wall_time_seconds;
        report("C3", median <= 2.0 && secs < 20.0,
               "fa/f1 median@100=" + fmt(median) + " (<= 2.0), time=" + fmt(secs) + "s (< 20s)");
        all_reports.push_back(r);
    }

    // C4: directional reproduction over 10 paired batches on f1 and f2.
    std::vector<ExperimentReport> f1_abc, f1_fa;
    {
        int batches_won = 0;
        for (std::uint64_t b = 0; b < 10; ++b) {
            const std::uint64_t seed = 2001 + b;
            const ExperimentReport abc2 = run_experiment(protocol_plan("abc", 2, seed));
            const ExperimentReport fa2 = run_experiment(protocol_plan("fa", 2, seed));
            const ExperimentReport abc3 = run_experiment(protocol_plan("abc", 3, seed));
            const ExperimentReport fa3 = run_experiment(protocol_plan("fa", 3, seed));
            if (median_at(abc2, 100) <= median_at(fa2, 100) && median_at(abc3, 100) <= median_at(fa3, 100))
                ++batches_won;
            f1_abc.push_back(abc2);
            f1_fa.push_back(fa2);
            all_reports.push_back(abc2);
            all_reports.push_back(fa2);
            all_reports.push_back(abc3);
            all_reports.push_back(fa3);
        }
        report("C4", batches_won >= 8,
               "abc median@100 <= fa median@100 on both f1 and f2 in " + std::to_string(batches_won) +
                   "/10 batches (need >= 8)");
    }

    // C5: convergence shape. Median@100 strictly below median@20 for both
    // algorithms on f1 in every batch; every trace non-increasing pointwise.
    {
        bool shape_ok = true;
        for (const auto* group : {&f1_abc, &f1_fa})
            for (const ExperimentReport& r : *group)
                if (!(median_at(r, 100) < median_at(r, 20))) shape_ok = false;

        std::size_t runs_checked = 0, violations = 0;
        for (const ExperimentReport& r : all_reports) {
            for (const RunResult& run : r.runs) {
                ++runs_checked;
                double prev = std::numeric_limits<double>::infinity();
                for (const TracePoint& p : run.trace.entries()) {
                    if (p.best > prev) {
                        ++violations;
                        break;
                    }
                    prev = p.best;
                }
            }
        }
        report("C5", shape_ok && violations == 0,
               "median@100 < median@20 in all f1 batches: " + std::string(shape_ok ? "yes" : "no") + "; " +
                   std::to_string(violations) + " monotonicity violations in " +
                   std::to_string(runs_checked) + " traces");
    }

    // C6: grid-oracle equivalence in 1-D.
    {
        double oracle_best = std::numeric_limits<double>::infinity();
        double oracle_arg = std::numeric_limits<double>::quiet_NaN();
        for (int k = 0; k <= 60000; ++k) {
            const double x = -30.0 + (k * 60.0) / 60000.0;
            const double f = benchmarks::rastrigin(std::vector<double>{x});
            if (f < oracle_best) {
                oracle_best = f;
                oracle_arg = x;
            }
        }
        const bool oracle_ok = oracle_best == 0.0 && oracle_arg == 0.0;

        const ExperimentReport r = run_experiment(protocol_plan("abc", 1, 1006));
        const double median = median_at(r, 100);
        all_reports.push_back(r);
        report("C6", oracle_ok && std::abs(median - oracle_best) <= 1e-2,
               "grid minimum " + fmt(oracle_best) + " at " + fmt(oracle_arg) + "; abc 1-D median@100=" +
                   fmt(median) + " within 1e-2 of the oracle");
    }

    // C7: unit and property spot checks.
    {
        bool ok = true;
        std::string why;

        if (!(abc::fitness_transform(0.0) == 1.0 && abc::fitness_transform(1.0) == 0.5 &&
              abc::fitness_transform(-3.0) == 4.0)) {
            ok = false;
            why += "[fitness branch values] ";
        }

        {
            RngStream rng(7001);
            std::mt19937_64 shuffler(7002);
            for (int round = 0; round < 100 && ok; ++round) {
                const std::size_t n = 1 + rng.uniform_index(50);
                std::vector<abc::FoodSource> sources(n);
                for (auto& s : sources) {
                    s.position = {0.0};
                    s.value = 0.0;
                    s.fitness = rng.uniform(1e-6, 5.0);
                }
                const auto probs = abc::selection_probabilities(sources);
                const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
                if (std::abs(total - 1.0) > 1e-12) {
                    ok = false;
                    why += "[probability normalization] ";
                }
                std::vector<std::size_t> perm(n);
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                std::shuffle(perm.begin(), perm.end(), shuffler);
                std::vector<abc::FoodSource> permuted(n);
                for (std::size_t i = 0; i < n; ++i) permuted[i] = sources[perm[i]];
                const auto permuted_probs = abc::selection_probabilities(permuted);
                for (std::size_t i = 0; i < n; ++i)
                    if (permuted_probs[i] != probs[perm[i]]) {
                        ok = false;
                        why += "[permutation equivariance] ";
                        break;
                    }
            }
        }

        {
            RngStream rng(7003);
            for (int i = 0; i < 1000 && ok; ++i) {
                std::vector<double> a(3), b(3), c(3);
                for (int k = 0; k < 3; ++k) {
                    a[k] = rng.uniform(-30.0, 30.0);
                    b[k] = rng.uniform(-30.0, 30.0);
                    c[k] = rng.uniform(-30.0, 30.0);
                }
                const double ab = fa::distance(a, b);
                if (ab < 0.0 || ab != fa::distance(b, a) ||
                    fa::distance(a, c) > ab + fa::distance(b, c) + 1e-12) {
                    ok = false;
                    why += "[distance metric] ";
                }
            }
        }

        if (!(fa::attractiveness(0.0, 0.8, 2.5) == 0.8 && fa::attractiveness(9.0, 0.8, 0.0) == 0.8)) {
            ok = false;
            why += "[attractiveness boundaries] ";
        }

        {
            const SearchSpace box = SearchSpace::uniform(3, -30.0, 30.0);
            RngStream rng(7004);
            for (int i = 0; i < 1000 && ok; ++i) {
                std::vector<double> x(3);
                for (double& v : x) v = rng.uniform(-90.0, 90.0);
                const auto once = clamp(x, box);
                if (clamp(once, box) != once) {
                    ok = false;
                    why += "[clamp idempotence] ";
                }
            }
        }

        {
            ExperimentPlan plan = protocol_plan("abc", 2, 7005);
            plan.repetitions = 2;
            std::get<abc::Config>(plan.config).max_iterations = 20;
            plan.checkpoints = {10, 20};
            const auto dir = std::filesystem::temp_directory_path();
            const auto pa = dir / "swarmopt_accept_a.json";
            const auto pb = dir / "swarmopt_accept_b.json";
            io::export_json(run_experiment(plan), pa);
            io::export_json(run_experiment(plan), pb);
            std::ifstream fa_(pa), fb(pb);
            std::stringstream sa, sb;
            sa << fa_.rdbuf();
            sb << fb.rdbuf();
            if (sa.str() != sb.str() || sa.str().empty()) {
                ok = false;
                why += "[byte-identical reports] ";
            }
            std::filesystem::remove(pa);
            std::filesystem::remove(pb);
        }

        report("C7", ok, ok ? "fitness branch values, probability normalization and equivariance, "
                              "distance metric, attractiveness boundaries, clamp idempotence, "
                              "byte-identical seeded reports"
                            : "failed: " + why);
    }

    // C8: exact evaluation budget for every ABC run executed above.
    {
        std::size_t checked = 0;
        std::size_t bad = 0;
        for (const ExperimentReport& r : all_reports) {
            if (r.plan.algorithm != "abc") continue;
            const auto& config = std::get<abc::Config>(r.plan.config);
            for (const RunResult& run : r.runs) {
                ++checked;
                const std::uint64_t expected =
                    config.colony_size + config.max_iterations * 2 * config.colony_size + run.scout_count;
                if (run.evaluations != expected || run.scout_count > config.max_iterations) ++bad;
            }
        }
        report("C8", bad == 0 && checked > 0,
               std::to_string(checked) + " abc runs satisfy evaluations == SN + sum(2*SN + scouts); " +
                   std::to_string(bad) + " violations");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}

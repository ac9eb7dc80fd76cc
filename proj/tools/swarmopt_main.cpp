// swarmopt: run and compare bee-colony / firefly experiments on the built-in
// benchmark functions. Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarmopt/swarmopt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct RunFlags {
    std::string algorithm;
    std::string function;
    std::size_t dims = 0;
    std::uint64_t iterations = 100;
    std::size_t population = 50;
    std::uint64_t seed = 1;
    std::uint64_t reps = 30;
    std::uint64_t limit = 0; // 0 = default colony_size * dims
    double alpha = 0.5;
    double beta0 = 1.0;
    double gamma = 1.0;
    int exponent_power = 2;
    std::string bounds = "-30:30";
    std::vector<std::uint64_t> checkpoints;
    std::string out;
    std::string format = "json";
    std::string plan_path;
};

struct CompareFlags {
    std::string report_a;
    std::string report_b;
};

struct TraceFlags {
    std::string report;
    std::string out;
};

std::pair<double, double> parse_bounds(const std::string& text) {
    const auto colon = text.find(':', 1); // skip a leading minus sign
    if (colon == std::string::npos)
        throw std::invalid_argument("--bounds: expected LO:HI, got '" + text + "'");
    double lo = 0.0, hi = 0.0;
    try {
        lo = std::stod(text.substr(0, colon));
        hi = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--bounds: expected numeric LO:HI, got '" + text + "'");
    }
    if (!(lo < hi)) throw std::invalid_argument("--bounds: lower bound must be strictly below upper");
    return {lo, hi};
}

// Relative output paths land under $SWARMOPT_OUT_DIR when it is set.
std::filesystem::path resolve_out_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("SWARMOPT_OUT_DIR")) return std::filesystem::path(dir) / p;
    return p;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t iterations) {
    std::vector<std::uint64_t> cps;
    for (std::uint64_t cp : {20ULL, 40ULL, 60ULL, 80ULL, 100ULL})
        if (cp <= iterations) cps.push_back(cp);
    if (cps.empty() || cps.back() != iterations) cps.push_back(iterations);
    return cps;
}

void print_stats_table(std::ostream& os, const std::vector<swarmopt::CheckpointStats>& stats) {
    os << std::setw(12) << "checkpoint" << std::setw(14) << "min" << std::setw(14) << "median"
       << std::setw(14) << "mean" << std::setw(14) << "std" << '\n';
    os << std::setprecision(6);
    for (const auto& s : stats)
        os << std::setw(12) << s.checkpoint << std::setw(14) << s.min << std::setw(14) << s.median
           << std::setw(14) << s.mean << std::setw(14) << s.std_dev << '\n';
}

void print_run_header(std::ostream& os, const swarmopt::ExperimentPlan& plan) {
    os << "swarmopt run\n";
    os << "  algorithm:      " << plan.algorithm << '\n';
    os << "  function:       " << plan.objective_name << " (dims " << plan.dims << ")\n";
    os << "  bounds:         [" << plan.lower.front() << ", " << plan.upper.front() << "] per dimension\n";
    if (const auto* c = std::get_if<swarmopt::abc::Config>(&plan.config)) {
        os << "  population:     " << c->colony_size << " food sources\n";
        os << "  iterations:     " << c->max_iterations << '\n';
        os << "  limit:          " << c->limit << " (abandonment threshold)\n";
    } else {
        const auto& f = std::get<swarmopt::fa::Config>(plan.config);
        os << "  population:     " << f.population << " fireflies\n";
        os << "  iterations:     " << f.max_iterations << '\n';
        os << "  alpha:          " << f.alpha << '\n';
        os << "  beta0:          " << f.beta0 << '\n';
        os << "  gamma:          " << f.gamma << '\n';
        os << "  exponent power: " << f.exponent_power << '\n';
    }
    os << "  repetitions:    " << plan.repetitions << '\n';
    os << "  base seed:      " << plan.base_seed << '\n';
    os << "  checkpoints:    ";
    for (std::size_t i = 0; i < plan.checkpoints.size(); ++i)
        os << (i ? " " : "") << plan.checkpoints[i];
    os << "\n\n";
}

int cmd_run(const RunFlags& flags, const CLI::App& sub) {
    const auto& registry = swarmopt::benchmarks::FunctionRegistry::builtin();
    swarmopt::ExperimentPlan plan;

    if (!flags.plan_path.empty()) {
        for (const char* name : {"--algorithm", "--function", "--dims", "--iterations", "--population",
                                 "--limit", "--alpha", "--beta0", "--gamma", "--exponent-power", "--bounds",
                                 "--checkpoints"}) {
            if (sub.count(name) > 0) {
                std::cerr << "error: " << name << " cannot be combined with --plan\n";
                return kExitUsage;
            }
        }
        try {
            std::ifstream in(flags.plan_path);
            if (!in) throw std::runtime_error("cannot open '" + flags.plan_path + "' for reading");
            swarmopt::io::json j;
            in >> j;
            plan = swarmopt::io::plan_from_json(j);
            if (sub.count("--seed") > 0) plan.base_seed = flags.seed;
            if (sub.count("--reps") > 0) plan.repetitions = flags.reps;
        } catch (const std::exception& e) {
            std::cerr << "error: invalid plan file: " << e.what() << '\n';
            return kExitUsage;
        }
    } else {
        if (sub.count("--algorithm") == 0 || sub.count("--function") == 0 || sub.count("--dims") == 0) {
            std::cerr << "error: --algorithm, --function and --dims are required (or pass --plan)\n";
            return kExitUsage;
        }
        if (flags.algorithm == "abc") {
            for (const char* name : {"--alpha", "--beta0", "--gamma", "--exponent-power"}) {
                if (sub.count(name) > 0) {
                    std::cerr << "error: " << name << " applies only to --algorithm fa\n";
                    return kExitUsage;
                }
            }
            swarmopt::abc::Config config;
            config.colony_size = flags.population;
            config.limit = flags.limit > 0 ? flags.limit : swarmopt::abc::default_limit(flags.population, flags.dims);
            config.max_iterations = flags.iterations;
            plan.config = config;
        } else {
            if (sub.count("--limit") > 0) {
                std::cerr << "error: --limit applies only to --algorithm abc\n";
                return kExitUsage;
            }
            swarmopt::fa::Config config;
            config.population = flags.population;
            config.alpha = flags.alpha;
            config.beta0 = flags.beta0;
            config.gamma = flags.gamma;
            config.exponent_power = flags.exponent_power;
            config.max_iterations = flags.iterations;
            plan.config = config;
        }
        plan.algorithm = flags.algorithm;
        plan.objective_name = flags.function;
        plan.dims = flags.dims;
        plan.repetitions = flags.reps;
        plan.base_seed = flags.seed;
        plan.checkpoints = flags.checkpoints.empty() ? default_checkpoints(flags.iterations) : flags.checkpoints;
    }

    // Bad bounds, names, dims or checkpoint lists are usage errors, caught
    // before any work starts.
    try {
        if (flags.plan_path.empty()) {
            const auto [lo, hi] = parse_bounds(flags.bounds);
            plan.lower.assign(flags.dims, lo);
            plan.upper.assign(flags.dims, hi);
        }
        swarmopt::validate(plan);
        registry.lookup(plan.objective_name, plan.dims);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        print_run_header(std::cout, plan);
        const swarmopt::ExperimentReport report = swarmopt::run_experiment(plan, registry);
        print_stats_table(std::cout, report.checkpoint_stats);
        std::cout << "\ntotal evaluations: " << report.total_evaluations << "   wall time: " << std::fixed
                  << std::setprecision(2) << report.total_wall_time_seconds << " s\n"
                  << std::defaultfloat;
        if (!flags.out.empty()) {
            const auto path = resolve_out_path(flags.out);
            if (flags.format == "json") {
                swarmopt::io::export_json(report, path);
                std::cout << "report written: " << path.string() << '\n';
            } else {
                swarmopt::io::export_csv(report, path);
                std::cout << "traces written: " << path.string() << '\n'
                          << "summary written: " << swarmopt::io::summary_path(path).string() << '\n';
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_compare(const CompareFlags& flags) {
    try {
        const auto a = swarmopt::io::import_json(flags.report_a);
        const auto b = swarmopt::io::import_json(flags.report_b);
        const swarmopt::ComparisonTable table = swarmopt::compare(a, b);

        std::cout << "objective: " << table.objective_name << " (dims " << table.dims << ")\n";
        std::cout << std::setw(12) << "algorithm";
        for (std::uint64_t cp : table.checkpoints) std::cout << std::setw(12) << cp;
        std::cout << '\n' << std::setprecision(6);
        std::cout << std::setw(12) << table.algorithm_a;
        for (double m : table.medians_a) std::cout << std::setw(12) << m;
        std::cout << '\n' << std::setw(12) << table.algorithm_b;
        for (double m : table.medians_b) std::cout << std::setw(12) << m;
        std::cout << '\n' << std::setw(12) << "winner";
        for (const std::string& w : table.winners) std::cout << std::setw(12) << w;
        std::cout << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_trace(const TraceFlags& flags) {
    try {
        const auto report = swarmopt::io::import_json(flags.report);
        std::filesystem::path out;
        if (flags.out.empty())
            out = std::filesystem::path(flags.report).replace_extension().string() + "_trace.csv";
        else
            out = resolve_out_path(flags.out);
        swarmopt::io::emit_plot_data(report, out);
        std::cout << "plot data written: " << out.string() << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

int cmd_list_functions() {
    const auto& registry = swarmopt::benchmarks::FunctionRegistry::builtin();
    std::cout << std::left << std::setw(14) << "function" << std::setw(10) << "dims"
              << "known minimum\n";
    for (const auto& entry : registry.entries_sorted()) {
        std::string minimum = "unknown";
        if (entry.minimum) {
            const auto m = entry.minimum(2);
            minimum = swarmopt::io::format_double(m.value) + " at origin";
        }
        std::cout << std::left << std::setw(14) << entry.name << std::setw(10) << entry.dims_note << minimum
                  << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarm-intelligence optimizers (artificial bee colony, firefly) "
                 "for bounded continuous minimization"};
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "run a multi-seed experiment and print checkpoint statistics");
    run->add_option("--algorithm", run_flags.algorithm, "optimizer: abc or fa")
        ->check(CLI::IsMember({"abc", "fa"}));
    run->add_option("--function", run_flags.function, "objective name (see list-functions)");
    run->add_option("--dims", run_flags.dims, "problem dimensionality");
    run->add_option("--iterations", run_flags.iterations, "iterations per run (default 100)");
    run->add_option("--population", run_flags.population, "population size (default 50)");
    run->add_option("--seed", run_flags.seed, "base seed for repetition seed derivation (default 1)");
    run->add_option("--reps", run_flags.reps, "independent repetitions (default 30)");
    run->add_option("--limit", run_flags.limit, "abc abandonment limit (default population * dims)");
    run->add_option("--alpha", run_flags.alpha, "fa random-step scale (default 0.5)");
    run->add_option("--beta0", run_flags.beta0, "fa maximum attractiveness (default 1.0)");
    run->add_option("--gamma", run_flags.gamma, "fa absorption coefficient (default 1.0)");
    run->add_option("--exponent-power", run_flags.exponent_power, "fa decay exponent power, 1 or 2 (default 2)")
        ->check(CLI::IsMember({1, 2}));
    run->add_option("--bounds", run_flags.bounds, "uniform box bounds LO:HI (default -30:30)");
    run->add_option("--checkpoints", run_flags.checkpoints, "iteration checkpoints (default 20,40,60,80,100)")
        ->delimiter(',');
    run->add_option("--out", run_flags.out, "write the report to this path");
    run->add_option("--format", run_flags.format, "report format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->needs("--out");
    run->add_option("--plan", run_flags.plan_path, "load the experiment plan from a JSON file");

    CompareFlags compare_flags;
    CLI::App* cmp = app.add_subcommand("compare", "compare two JSON reports checkpoint by checkpoint");
    cmp->add_option("report_a", compare_flags.report_a, "first JSON report")->required();
    cmp->add_option("report_b", compare_flags.report_b, "second JSON report")->required();

    TraceFlags trace_flags;
    CLI::App* trace = app.add_subcommand("trace", "emit plot-ready median convergence data from a report");
    trace->add_option("report", trace_flags.report, "JSON report path")->required();
    trace->add_option("--out", trace_flags.out, "output CSV path (default <report>_trace.csv)");

    app.add_subcommand("list-functions", "list registered objective functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cerr << "run with --help for usage\n";
        return kExitUsage;
    }

    if (run->parsed()) return cmd_run(run_flags, *run);
    if (cmp->parsed()) return cmd_compare(compare_flags);
    if (trace->parsed()) return cmd_trace(trace_flags);
    return cmd_list_functions();
}

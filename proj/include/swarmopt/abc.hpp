#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarmopt/core.hpp"

namespace swarmopt::abc {

/// One food source: a candidate position with its objective value, selection
/// fitness and the count of consecutive failed improvement attempts.
struct FoodSource {
    std::vector<double> position;
    double value = 0.0;
    double fitness = 0.0;
    std::uint32_t trials = 0;
};

struct Config {
    std::size_t colony_size = 50;   // number of food sources (SN)
    std::uint64_t limit = 100;      // abandonment threshold; conventional default is SN * dims
    std::uint64_t max_iterations = 100;

    bool operator==(const Config&) const = default;
};

/// Conventional abandonment limit, colony_size * dims.
inline std::uint64_t default_limit(std::size_t colony_size, std::size_t dims) {
    return static_cast<std::uint64_t>(colony_size) * static_cast<std::uint64_t>(dims);
}

inline void validate(const Config& config) {
    if (config.colony_size < 2)
        throw std::invalid_argument("abc: colony_size must be at least 2 (neighbor search needs a partner)");
    if (config.limit < 1) throw std::invalid_argument("abc: limit must be at least 1");
}

/// Objective value -> positive selection weight:
/// 1/(1+f) for f >= 0, otherwise 1 + |f|. Strictly decreasing in f, so
/// greedy-by-fitness equals greedy-by-objective.
inline double fitness_transform(double f) {
    if (!std::isfinite(f)) throw std::domain_error("fitness_transform: objective value is not finite");
    return f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::abs(f);
}

/// Candidate move: copy of x_i with coordinate j nudged against partner x_k,
/// v_j = x_j + phi * (x_j - x_k_j). No clamping here.
inline std::vector<double> neighbor_step(std::span<const double> xi, std::span<const double> xk,
                                         std::size_t j, double phi) {
    if (xi.size() != xk.size()) throw std::invalid_argument("neighbor_step: mismatched vector lengths");
    if (j >= xi.size()) throw std::invalid_argument("neighbor_step: coordinate index out of range");
    std::vector<double> v(xi.begin(), xi.end());
    v[j] = xi[j] + phi * (xi[j] - xk[j]);
    return v;
}

/// Draws dimension j, partner k != i and phi in [-1, 1), in that order, and
/// returns the clamped candidate position for source i.
inline std::vector<double> neighbor(const std::vector<FoodSource>& sources, std::size_t i,
                                    RngStream& rng, const SearchSpace& space) {
    if (sources.size() < 2)
        throw std::invalid_argument("abc::neighbor: need at least 2 food sources");
    if (i >= sources.size()) throw std::invalid_argument("abc::neighbor: source index out of range");
    const std::size_t j = rng.uniform_index(space.dims());
    std::size_t k = rng.uniform_index(sources.size() - 1);
    if (k >= i) ++k; // skip self with a single draw
    const double phi = rng.symmetric_unit();
    return clamp(neighbor_step(sources[i].position, sources[k].position, j, phi), space);
}

namespace detail {

/// Neighbor search plus greedy replacement for one source. Ties keep the
/// incumbent. Exactly one objective evaluation.
inline void try_improve(std::vector<FoodSource>& sources, std::size_t i, Evaluator& objective,
                        RngStream& rng, const SearchSpace& space) {
    std::vector<double> candidate = neighbor(sources, i, rng, space);
    const double value = objective(candidate);
    const double fitness = fitness_transform(value);
    FoodSource& src = sources[i];
    if (fitness > src.fitness) {
        src.position = std::move(candidate);
        src.value = value;
        src.fitness = fitness;
        src.trials = 0;
    } else {
        ++src.trials;
    }
}

} // namespace detail

/// Every employed bee proposes one neighbor for its own source; better fitness
/// replaces, otherwise the trial counter grows. Exactly SN evaluations.
inline void employed_phase(std::vector<FoodSource>& sources, Evaluator& objective, RngStream& rng,
                           const SearchSpace& space) {
    for (std::size_t i = 0; i < sources.size(); ++i) detail::try_improve(sources, i, objective, rng, space);
}

/// Fitness-proportionate probabilities p_i = fit_i / sum(fit). The denominator
/// is accumulated in sorted order so the result is exactly invariant under
/// permutation of the sources.
inline std::vector<double> selection_probabilities(const std::vector<FoodSource>& sources) {
    std::vector<double> fitness(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        fitness[i] = sources[i].fitness;
        if (!(fitness[i] > 0.0))
            throw std::invalid_argument("selection_probabilities: fitness must be positive (source " +
                                        std::to_string(i) + ")");
    }
    std::vector<double> sorted = fitness;
    std::sort(sorted.begin(), sorted.end());
    const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    std::vector<double> probs(fitness.size());
    for (std::size_t i = 0; i < fitness.size(); ++i) probs[i] = fitness[i] / total;
    return probs;
}

/// Cumulative-sum inversion of one uniform draw in [0, 1); the last bucket
/// absorbs any rounding residue.
inline std::size_t roulette_pick(std::span<const double> probabilities, RngStream& rng) {
    if (probabilities.empty()) throw std::invalid_argument("roulette_pick: empty probability vector");
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return i;
    }
    return probabilities.size() - 1;
}

/// SN onlooker selections: each draws a source by roulette over the current
/// selection probabilities, then applies the same neighbor/greedy step as the
/// employed phase. Exactly SN evaluations.
inline void onlooker_phase(std::vector<FoodSource>& sources, Evaluator& objective, RngStream& rng,
                           const SearchSpace& space) {
    for (std::size_t n = 0; n < sources.size(); ++n) {
        const std::size_t i = roulette_pick(selection_probabilities(sources), rng);
        detail::try_improve(sources, i, objective, rng, space);
    }
}

/// Abandonment: among sources with trials > limit, re-initialize the one with
/// the most trials (ties: lowest index) at a fresh uniform position. At most
/// one source per call. Returns whether a scout fired.
inline bool scout_phase(std::vector<FoodSource>& sources, Evaluator& objective, RngStream& rng,
                        const SearchSpace& space, std::uint64_t limit) {
    std::size_t worst = sources.size();
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (sources[i].trials > limit && (worst == sources.size() || sources[i].trials > sources[worst].trials))
            worst = i;
    }
    if (worst == sources.size()) return false;
    FoodSource& src = sources[worst];
    src.position = random_point(space, rng);
    src.value = objective(src.position);
    src.fitness = fitness_transform(src.value);
    src.trials = 0;
    return true;
}

/// Full ABC run: uniform initialization, then employed -> onlooker -> scout
/// per iteration. The trace records the global best-so-far from iteration 0
/// (post-initialization) through max_iterations, and the reported best is kept
/// across scout resets.
inline RunResult run(const Config& config, const ObjectiveSpec& objective, const SearchSpace& space,
                     std::uint64_t seed) {
    validate(config);
    if (objective.dims != space.dims())
        throw std::invalid_argument("abc::run: objective dims " + std::to_string(objective.dims) +
                                    " does not match space dims " + std::to_string(space.dims()));

    const auto start = std::chrono::steady_clock::now();
    RngStream rng(seed);
    Evaluator eval(objective);

    std::vector<FoodSource> sources(config.colony_size);
    for (FoodSource& src : sources) {
        src.position = random_point(space, rng);
        src.value = eval(src.position);
        src.fitness = fitness_transform(src.value);
        src.trials = 0;
    }

    RunResult result;
    result.algorithm = "abc";
    result.objective = objective.name;
    result.seed = seed;
    result.best_value = sources.front().value;
    result.best_point = sources.front().position;

    auto absorb_best = [&](const std::vector<FoodSource>& pool) {
        for (const FoodSource& src : pool) {
            if (src.value < result.best_value) {
                result.best_value = src.value;
                result.best_point = src.position;
            }
        }
    };
    absorb_best(sources);
    result.trace.record(0, result.best_value);

    for (std::uint64_t iter = 1; iter <= config.max_iterations; ++iter) {
        employed_phase(sources, eval, rng, space);
        absorb_best(sources);
        onlooker_phase(sources, eval, rng, space);
        absorb_best(sources); // captures values of sources abandoned next
        if (scout_phase(sources, eval, rng, space, config.limit)) ++result.scout_count;
        absorb_best(sources);
        result.trace.record(iter, result.best_value);
    }

    result.evaluations = eval.count();
    result.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace swarmopt::abc

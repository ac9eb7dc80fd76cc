#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarmopt/core.hpp"

namespace swarmopt::fa {

/// One firefly: position plus its objective value. Brightness is derived:
/// a is brighter than b iff value(a) < value(b).
struct Firefly {
    std::vector<double> position;
    double value = 0.0;
};

struct Config {
    std::size_t population = 50;
    double alpha = 0.5;        // random-step scale
    double beta0 = 1.0;        // attractiveness at distance zero
    double gamma = 1.0;        // light absorption coefficient
    int exponent_power = 2;    // r-exponent in the attractiveness decay: 1 or 2
    // Noise steps are alpha * (u - 1/2) * (upper - lower) per coordinate, the
    // classic formulation. With false, alpha is applied in raw coordinate
    // units; on wide boxes that reading degenerates into a slow diffusion.
    bool alpha_scaled_to_box = true;
    std::uint64_t max_iterations = 100;

    bool operator==(const Config&) const = default;
};

inline void validate(const Config& config) {
    if (config.population < 1) throw std::invalid_argument("fa: population must be at least 1");
    if (!(config.alpha >= 0.0)) throw std::invalid_argument("fa: alpha must be >= 0");
    if (!(config.beta0 >= 0.0 && config.beta0 <= 1.0))
        throw std::invalid_argument("fa: beta0 must lie in [0, 1]");
    if (!(config.gamma >= 0.0)) throw std::invalid_argument("fa: gamma must be >= 0");
    if (config.exponent_power != 1 && config.exponent_power != 2)
        throw std::invalid_argument("fa: exponent_power must be 1 or 2");
}

/// Euclidean distance.
inline double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("fa::distance: mismatched vector lengths");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum);
}

/// Attractiveness decay beta0 * exp(-gamma * r^power). Power 2 is the
/// conventional reading; power 1 matches the decay as literally printed in
/// some FA write-ups.
inline double attractiveness(double r, double beta0, double gamma, int exponent_power = 2) {
    if (r < 0.0) throw std::domain_error("fa::attractiveness: distance must be non-negative");
    const double rp = exponent_power == 1 ? r : r * r;
    return beta0 * std::exp(-gamma * rp);
}

/// Attraction move, per coordinate: x_i + beta * (x_j - x_i) + alpha_k * (u_k - 1/2)
/// with the noise draws u supplied by the caller. No clamping here.
inline std::vector<double> attraction_step(std::span<const double> xi, std::span<const double> xj,
                                           double beta, std::span<const double> alpha,
                                           std::span<const double> u) {
    if (xi.size() != xj.size() || xi.size() != u.size() || xi.size() != alpha.size())
        throw std::invalid_argument("fa::attraction_step: mismatched vector lengths");
    std::vector<double> v(xi.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = xi[k] + beta * (xj[k] - xi[k]) + alpha[k] * (u[k] - 0.5);
    return v;
}

/// Same step with one noise scale shared by every coordinate.
inline std::vector<double> attraction_step(std::span<const double> xi, std::span<const double> xj,
                                           double beta, double alpha, std::span<const double> u) {
    return attraction_step(xi, xj, beta, std::vector<double>(xi.size(), alpha), u);
}

namespace detail {

inline std::vector<double> draw_unit(std::size_t dims, RngStream& rng) {
    std::vector<double> u(dims);
    for (double& uk : u) uk = rng.uniform01(); // one draw per coordinate, in order
    return u;
}

/// Per-coordinate noise amplitude for the configured alpha semantics.
inline std::vector<double> noise_amplitudes(const Config& config, const SearchSpace& space) {
    std::vector<double> amp(space.dims(), config.alpha);
    if (config.alpha_scaled_to_box)
        for (std::size_t k = 0; k < amp.size(); ++k)
            amp[k] = config.alpha * (space.upper()[k] - space.lower()[k]);
    return amp;
}

} // namespace detail

/// Moves firefly i toward a strictly brighter j, clamps to the box and
/// re-evaluates. One objective evaluation.
inline Firefly move_toward(const Firefly& i, const Firefly& j, const Config& config, RngStream& rng,
                           const SearchSpace& space, Evaluator& objective) {
    const double beta =
        attractiveness(distance(i.position, j.position), config.beta0, config.gamma, config.exponent_power);
    const std::vector<double> u = detail::draw_unit(space.dims(), rng);
    Firefly moved;
    moved.position = clamp(
        attraction_step(i.position, j.position, beta, detail::noise_amplitudes(config, space), u), space);
    moved.value = objective(moved.position);
    return moved;
}

/// Random walk of the current brightest firefly: x + alpha * (u - 1/2) per
/// coordinate, clamped and re-evaluated. The walking firefly may worsen; the
/// run keeps the global best separately.
inline Firefly random_walk(const Firefly& best, const Config& config, RngStream& rng,
                           const SearchSpace& space, Evaluator& objective) {
    const std::vector<double> u = detail::draw_unit(space.dims(), rng);
    const std::vector<double> amp = detail::noise_amplitudes(config, space);
    std::vector<double> v(best.position.begin(), best.position.end());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += amp[k] * (u[k] - 0.5);
    Firefly walked;
    walked.position = clamp(v, space);
    walked.value = objective(walked.position);
    return walked;
}

/// Full FA run: uniform initialization, then per iteration the pairwise
/// attraction sweep (i over the population, j over lower indices; i moves and
/// is re-evaluated immediately whenever j is strictly brighter), the random
/// walk of the brightest, and a brightness ranking. Equal-value fireflies do
/// not attract each other.
inline RunResult run(const Config& config, const ObjectiveSpec& objective, const SearchSpace& space,
                     std::uint64_t seed) {
    validate(config);
    if (objective.dims != space.dims())
        throw std::invalid_argument("fa::run: objective dims " + std::to_string(objective.dims) +
                                    " does not match space dims " + std::to_string(space.dims()));

    const auto start = std::chrono::steady_clock::now();
    RngStream rng(seed);
    Evaluator eval(objective);

    std::vector<Firefly> fireflies(config.population);
    for (Firefly& ff : fireflies) {
        ff.position = random_point(space, rng);
        ff.value = eval(ff.position);
    }

    RunResult result;
    result.algorithm = "fa";
    result.objective = objective.name;
    result.seed = seed;
    result.best_value = fireflies.front().value;
    result.best_point = fireflies.front().position;

    auto absorb = [&](const Firefly& ff) {
        if (ff.value < result.best_value) {
            result.best_value = ff.value;
            result.best_point = ff.position;
        }
    };
    for (const Firefly& ff : fireflies) absorb(ff);
    result.trace.record(0, result.best_value);

    for (std::uint64_t iter = 1; iter <= config.max_iterations; ++iter) {
        for (std::size_t i = 0; i < fireflies.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (fireflies[j].value < fireflies[i].value) {
                    fireflies[i] = move_toward(fireflies[i], fireflies[j], config, rng, space, eval);
                    absorb(fireflies[i]);
                }
            }
        }
        // brightest takes the exploratory walk (ties: lowest index)
        const auto brightest = std::min_element(
            fireflies.begin(), fireflies.end(),
            [](const Firefly& a, const Firefly& b) { return a.value < b.value; });
        *brightest = random_walk(*brightest, config, rng, space, eval);
        absorb(*brightest);

        std::stable_sort(fireflies.begin(), fireflies.end(),
                         [](const Firefly& a, const Firefly& b) { return a.value < b.value; });
        result.trace.record(iter, result.best_value);
    }

    result.evaluations = eval.count();
    result.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace swarmopt::fa

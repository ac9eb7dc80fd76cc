#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swarmopt {

/// Axis-aligned feasible box: per-dimension lower/upper bounds.
/// Bounds are validated once here; everything downstream may assume them.
class SearchSpace {
  public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("SearchSpace: bounds must be non-empty and equal length");
        for (std::size_t j = 0; j < lower_.size(); ++j) {
            if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]))
                throw std::invalid_argument("SearchSpace: bounds must be finite");
            if (!(lower_[j] < upper_[j]))
                throw std::invalid_argument("SearchSpace: lower bound must be strictly below upper in dimension " +
                                            std::to_string(j));
        }
    }

    /// Same [lo, hi] interval in every dimension.
    static SearchSpace uniform(std::size_t dims, double lo, double hi) {
        return SearchSpace(std::vector<double>(dims, lo), std::vector<double>(dims, hi));
    }

    std::size_t dims() const { return lower_.size(); }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }

    bool contains(std::span<const double> x) const {
        if (x.size() != dims()) return false;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < lower_[j] || x[j] > upper_[j]) return false;
        return true;
    }

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

struct KnownMinimum {
    double value;
    std::vector<double> location;
};

/// Named scalar objective over real vectors. Minimization only; eval must be
/// deterministic and finite on every feasible point.
struct ObjectiveSpec {
    std::string name;
    std::size_t dims;
    std::function<double(std::span<const double>)> eval;
    std::optional<KnownMinimum> known_minimum;
};

/// Deterministic random stream: every draw is a pure function of the seed.
/// Distribution code is hand-rolled on top of the (fully specified) mt19937_64
/// engine so that sequences are bit-identical across platforms and library
/// versions.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform in [-1, 1).
    double symmetric_unit() { return 2.0 * uniform01() - 1.0; }

    /// Unbiased uniform index in {0, ..., n-1}.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("RngStream::uniform_index: n must be positive");
        const std::uint64_t m = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - m) % m; // 2^64 mod n
        std::uint64_t x = next_u64();
        while (x < threshold) x = next_u64();
        return static_cast<std::size_t>(x % m);
    }

    /// Child seed for repetition `index` of an experiment rooted at `base`.
    /// splitmix64 finalizer over a golden-ratio index offset.
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Componentwise projection onto the box.
inline std::vector<double> clamp(std::span<const double> x, const SearchSpace& space) {
    if (x.size() != space.dims())
        throw std::invalid_argument("clamp: vector length " + std::to_string(x.size()) +
                                    " does not match space dims " + std::to_string(space.dims()));
    std::vector<double> y(x.begin(), x.end());
    for (std::size_t j = 0; j < y.size(); ++j)
        y[j] = std::min(space.upper()[j], std::max(space.lower()[j], y[j]));
    return y;
}

/// Affine map of unit-cube coordinates into the box:
/// x[j] = lower[j] + u[j] * (upper[j] - lower[j]).
inline std::vector<double> point_from_unit(const SearchSpace& space, std::span<const double> u) {
    if (u.size() != space.dims())
        throw std::invalid_argument("point_from_unit: unit vector length does not match space dims");
    std::vector<double> x(space.dims());
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = space.lower()[j] + u[j] * (space.upper()[j] - space.lower()[j]);
    return clamp(x, space); // guard against outward rounding at the endpoints
}

/// Uniform sample inside the box; one u-draw per coordinate, in coordinate order.
inline std::vector<double> random_point(const SearchSpace& space, RngStream& rng) {
    std::vector<double> u(space.dims());
    for (double& uj : u) uj = rng.uniform01();
    return point_from_unit(space, u);
}

struct TracePoint {
    std::uint64_t iteration;
    double best;

    bool operator==(const TracePoint&) const = default;
};

/// Best-objective-so-far per iteration. Monotone by construction: record()
/// folds each candidate with the running minimum.
class ConvergenceTrace {
  public:
    /// Appends (iteration, min(candidate, previous best)). The first entry must
    /// be iteration 0; later iterations must be strictly increasing.
    void record(std::uint64_t iteration, double candidate_best) {
        if (entries_.empty()) {
            if (iteration != 0)
                throw std::invalid_argument("ConvergenceTrace: first entry must be iteration 0");
            entries_.push_back({0, candidate_best});
            return;
        }
        if (iteration <= entries_.back().iteration)
            throw std::invalid_argument("ConvergenceTrace: iteration " + std::to_string(iteration) +
                                        " not above last recorded " +
                                        std::to_string(entries_.back().iteration));
        entries_.push_back({iteration, std::min(candidate_best, entries_.back().best)});
    }

    std::span<const TracePoint> entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Final best-so-far.
    double best() const {
        if (entries_.empty()) throw std::logic_error("ConvergenceTrace: empty");
        return entries_.back().best;
    }

    /// Best-so-far at an exact recorded iteration.
    double value_at(std::uint64_t iteration) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), iteration,
                                   [](const TracePoint& p, std::uint64_t i) { return p.iteration < i; });
        if (it == entries_.end() || it->iteration != iteration)
            throw std::out_of_range("ConvergenceTrace: no entry for iteration " + std::to_string(iteration));
        return it->best;
    }

    bool operator==(const ConvergenceTrace&) const = default;

  private:
    std::vector<TracePoint> entries_;
};

/// Outcome of one optimizer run. Immutable after construction; safe to move
/// between threads.
struct RunResult {
    std::string algorithm;
    std::string objective;
    std::uint64_t seed = 0;
    std::vector<double> best_point;
    double best_value = 0.0;
    ConvergenceTrace trace;
    std::uint64_t evaluations = 0;
    std::uint64_t scout_count = 0; // abandonment re-initializations (ABC); 0 for FA
    double wall_time_seconds = 0.0;
};

/// Counting, validating wrapper around ObjectiveSpec::eval. Non-finite results
/// are a hard error, reported with the offending point.
class Evaluator {
  public:
    explicit Evaluator(const ObjectiveSpec& spec) : spec_(&spec) {}

    double operator()(std::span<const double> x) {
        ++count_;
        const double f = spec_->eval(x);
        if (!std::isfinite(f)) {
            std::ostringstream msg;
            msg << "objective '" << spec_->name << "' returned non-finite value at point (";
            for (std::size_t j = 0; j < x.size(); ++j) msg << (j ? ", " : "") << x[j];
            msg << ")";
            throw std::domain_error(msg.str());
        }
        return f;
    }

    std::uint64_t count() const { return count_; }
    const ObjectiveSpec& spec() const { return *spec_; }

  private:
    const ObjectiveSpec* spec_;
    std::uint64_t count_ = 0;
};

} // namespace swarmopt

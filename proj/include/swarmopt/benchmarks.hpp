#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmopt/core.hpp"

namespace swarmopt::benchmarks {

/// Rastrigin in n dimensions: 10n + sum(x^2 - 10 cos(2 pi x)).
/// Non-negative everywhere, zero exactly at the origin.
inline double rastrigin(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("rastrigin: input vector is empty");
    double sum = 10.0 * static_cast<double>(x.size());
    for (double xi : x) sum += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
    return sum;
}

/// Sphere: sum(x^2). Unimodal smoke-test objective, for optimizer debugging.
inline double sphere(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("sphere: input vector is empty");
    double sum = 0.0;
    for (double xi : x) sum += xi * xi;
    return sum;
}

/// Name -> objective factory table. Lookups always hand back an ObjectiveSpec
/// whose dims match the request.
class FunctionRegistry {
  public:
    struct Entry {
        std::string name;
        std::size_t min_dims = 1;
        std::function<double(std::span<const double>)> eval;
        std::function<KnownMinimum(std::size_t dims)> minimum; // null when unknown
        std::string dims_note;                                 // for listings, e.g. "n >= 1"
    };

    void add(Entry entry) { entries_[entry.name] = std::move(entry); }

    ObjectiveSpec lookup(const std::string& name, std::size_t dims) const {
        auto it = entries_.find(name);
        if (it == entries_.end())
            throw std::out_of_range("unknown function '" + name + "'; registered: " + registered_names());
        const Entry& e = it->second;
        if (dims < e.min_dims)
            throw std::out_of_range("function '" + name + "' requires dims >= " + std::to_string(e.min_dims) +
                                    ", got " + std::to_string(dims));
        ObjectiveSpec spec;
        spec.name = e.name;
        spec.dims = dims;
        spec.eval = e.eval;
        if (e.minimum) spec.known_minimum = e.minimum(dims);
        return spec;
    }

    bool has(const std::string& name) const { return entries_.count(name) != 0; }

    /// Entries sorted by name (std::map order), for stable listings.
    std::vector<Entry> entries_sorted() const {
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& [_, e] : entries_) out.push_back(e);
        return out;
    }

    std::string registered_names() const {
        std::string names;
        for (const auto& [name, _] : entries_) {
            if (!names.empty()) names += ", ";
            names += name;
        }
        return names;
    }

    /// Built-in objectives: rastrigin (the headline benchmark, any n >= 1) and
    /// sphere (debugging aid).
    static const FunctionRegistry& builtin() {
        static const FunctionRegistry reg = [] {
            FunctionRegistry r;
            auto origin_minimum = [](std::size_t dims) {
                return KnownMinimum{0.0, std::vector<double>(dims, 0.0)};
            };
            r.add({"rastrigin", 1, [](std::span<const double> x) { return rastrigin(x); }, origin_minimum,
                   "n >= 1"});
            r.add({"sphere", 1, [](std::span<const double> x) { return sphere(x); }, origin_minimum,
                   "n >= 1"});
            return r;
        }();
        return reg;
    }

  private:
    std::map<std::string, Entry> entries_;
};

} // namespace swarmopt::benchmarks

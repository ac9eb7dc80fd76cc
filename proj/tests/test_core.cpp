#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "swarmopt/core.hpp"

using namespace swarmopt;
using Catch::Approx;

TEST_CASE("SearchSpace validates its bounds") {
    REQUIRE_THROWS_AS(SearchSpace({}, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(SearchSpace({0.0}, {1.0, 2.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(SearchSpace({1.0}, {1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(SearchSpace({2.0}, {1.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(SearchSpace::uniform(2, -30.0, std::numeric_limits<double>::infinity()),
                      std::invalid_argument);

    const SearchSpace box = SearchSpace::uniform(3, -30.0, 30.0);
    REQUIRE(box.dims() == 3);
    REQUIRE(box.contains(std::vector<double>{0.0, 30.0, -30.0}));
    REQUIRE_FALSE(box.contains(std::vector<double>{0.0, 30.5, 0.0}));
    REQUIRE_FALSE(box.contains(std::vector<double>{0.0, 0.0}));
}

TEST_CASE("point_from_unit hits the box endpoints and midpoint") {
    const SearchSpace box = SearchSpace::uniform(4, -30.0, 30.0);

    const auto lo = point_from_unit(box, std::vector<double>(4, 0.0));
    const auto hi = point_from_unit(box, std::vector<double>(4, 1.0));
    const auto mid = point_from_unit(box, std::vector<double>(4, 0.5));
    for (std::size_t j = 0; j < 4; ++j) {
        REQUIRE(lo[j] == -30.0);
        REQUIRE(hi[j] == 30.0);
        REQUIRE(mid[j] == 0.0);
    }
    REQUIRE_THROWS_AS(point_from_unit(box, std::vector<double>(3, 0.5)), std::invalid_argument);
}

TEST_CASE("random_point is uniform-ish and always feasible") {
    const SearchSpace box = SearchSpace::uniform(1, -30.0, 30.0);
    RngStream rng(12345);
    double sum = 0.0;
    double lo = 1e300, hi = -1e300;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto x = random_point(box, rng);
        sum += x[0];
        lo = std::min(lo, x[0]);
        hi = std::max(hi, x[0]);
    }
    REQUIRE(std::abs(sum / n) < 0.5);
    REQUIRE(lo >= -30.0);
    REQUIRE(hi <= 30.0);

    const SearchSpace skew({-1.0, 0.0, 100.0}, {2.0, 0.5, 101.0});
    for (int i = 0; i < 1000; ++i) REQUIRE(skew.contains(random_point(skew, rng)));
}

TEST_CASE("clamp saturates coordinates and is idempotent") {
    const SearchSpace box = SearchSpace::uniform(2, -30.0, 30.0);

    REQUIRE(clamp(std::vector<double>{35.0, -42.0}, box) == std::vector<double>{30.0, -30.0});
    REQUIRE(clamp(std::vector<double>{1.0, 2.0}, box) == std::vector<double>{1.0, 2.0});
    REQUIRE(clamp(std::vector<double>{30.0, 30.0}, box) == std::vector<double>{30.0, 30.0});
    REQUIRE_THROWS_AS(clamp(std::vector<double>{1.0}, box), std::invalid_argument);

    RngStream rng(7);
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> x{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
        const auto once = clamp(x, box);
        REQUIRE(clamp(once, box) == once);
        REQUIRE(box.contains(once));
    }
}

TEST_CASE("ConvergenceTrace records the running minimum") {
    ConvergenceTrace trace;
    trace.record(0, 7.5);
    REQUIRE(trace.entries().back() == TracePoint{0, 7.5});

    for (std::uint64_t i = 1; i <= 5; ++i) trace.record(i, 1.0);
    trace.record(6, 2.0); // worse candidate: best-so-far sticks
    REQUIRE(trace.value_at(6) == 1.0);
    trace.record(7, 0.3);
    REQUIRE(trace.value_at(7) == 0.3);

    REQUIRE_THROWS_AS(trace.record(7, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(trace.record(3, 0.1), std::invalid_argument);

    ConvergenceTrace late;
    REQUIRE_THROWS_AS(late.record(1, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(late.value_at(0), std::logic_error);
}

TEST_CASE("ConvergenceTrace best-so-far is non-increasing for any input") {
    RngStream rng(99);
    ConvergenceTrace trace;
    trace.record(0, rng.uniform(0.0, 100.0));
    for (std::uint64_t i = 1; i <= 500; ++i) trace.record(i, rng.uniform(0.0, 100.0));
    double prev = trace.entries().front().best;
    for (const TracePoint& p : trace.entries()) {
        REQUIRE(p.best <= prev);
        prev = p.best;
    }
    REQUIRE(trace.best() == trace.entries().back().best);
    REQUIRE_THROWS_AS(trace.value_at(501), std::out_of_range);
}

TEST_CASE("RngStream replays bit-for-bit from its seed") {
    RngStream a(42), b(42), c(43);
    bool any_diff = false;
    for (int i = 0; i < 2000; ++i) {
        switch (i % 4) {
        case 0: {
            auto x = a.next_u64(), y = b.next_u64();
            REQUIRE(x == y);
            any_diff |= (x != c.next_u64());
            break;
        }
        case 1: {
            auto x = a.uniform01(), y = b.uniform01();
            REQUIRE(x == y);
            REQUIRE(x >= 0.0);
            REQUIRE(x < 1.0);
            any_diff |= (x != c.uniform01());
            break;
        }
        case 2: {
            auto x = a.symmetric_unit(), y = b.symmetric_unit();
            REQUIRE(x == y);
            REQUIRE(x >= -1.0);
            REQUIRE(x < 1.0);
            any_diff |= (x != c.symmetric_unit());
            break;
        }
        default: {
            auto x = a.uniform_index(17), y = b.uniform_index(17);
            REQUIRE(x == y);
            REQUIRE(x < 17);
            any_diff |= (x != c.uniform_index(17));
        }
        }
    }
    REQUIRE(any_diff);
}

TEST_CASE("uniform_index covers every bucket without escaping the range") {
    RngStream rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 10000; ++i) ++hits.at(rng.uniform_index(7));
    for (int h : hits) REQUIRE(h > 0);
    REQUIRE_THROWS_AS(rng.uniform_index(0), std::invalid_argument);
}

TEST_CASE("derive_seed spreads repetition seeds deterministically") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t r = 0; r < 100; ++r) {
        const auto s = RngStream::derive_seed(424242, r);
        REQUIRE(s == RngStream::derive_seed(424242, r));
        seeds.insert(s);
    }
    REQUIRE(seeds.size() == 100);
    REQUIRE(RngStream::derive_seed(1, 0) != RngStream::derive_seed(2, 0));
}

TEST_CASE("Evaluator counts calls and rejects non-finite objective values") {
    ObjectiveSpec nan_at_origin{
        "nan_at_origin", 2,
        [](std::span<const double> x) {
            return x[0] == 0.0 ? std::numeric_limits<double>::quiet_NaN() : x[0] + x[1];
        },
        std::nullopt};
    Evaluator eval(nan_at_origin);

    REQUIRE(eval(std::vector<double>{1.0, 2.0}) == 3.0);
    REQUIRE(eval.count() == 1);

    try {
        eval(std::vector<double>{0.0, 5.0});
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        const std::string msg = e.what();
        REQUIRE(msg.find("nan_at_origin") != std::string::npos);
        REQUIRE(msg.find("0") != std::string::npos);
        REQUIRE(msg.find("5") != std::string::npos);
    }
    REQUIRE(eval.count() == 2);
}

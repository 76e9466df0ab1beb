#include "doctest.h"

#include <cmath>
#include <map>

#include "lexsamp/cftp.hpp"
#include "lexsamp/oracle.hpp"
#include "lexsamp/stats.hpp"
#include "test_support.hpp"

using namespace lexsamp;
using namespace lexsamp::testing;

TEST_CASE("initial bounding state") {
    CHECK(initial_bounding_state(5) == BoundingState{{kStar, kStar, kStar, kStar, 1}, 1});
    CHECK(initial_bounding_state(2) == BoundingState{{kStar, 1}, 1});
    const BoundingState one = initial_bounding_state(1);
    CHECK(one == BoundingState{{1}, 1});
    CHECK(one.is_permutation());
    CHECK_THROWS(initial_bounding_state(0));
}

TEST_CASE("recommended_t") {
    CHECK(recommended_t(5) == 35);
    CHECK(recommended_t(2) == 3);
    CHECK(recommended_t(4) == 15);
    CHECK(recommended_t(16) == 486);
    for (int n = 2; n <= 64; ++n) {
        const double m = n;
        const auto expected =
            static_cast<std::uint64_t>(std::ceil((m * m - m + 3) * std::ceil(std::log2(m)) / 2));
        CHECK(recommended_t(n) == expected);
    }
}

TEST_CASE("single item needs no coins") {
    const Poset poset = normalize(Relation(1));
    for (const Driver d : {Driver::doubling, Driver::fixed}) {
        const SampleResult r = sample(poset, d, 1, 123);
        CHECK(r.original == Permutation{1});
        CHECK(r.stats.bits_consumed == 0);
        CHECK(r.stats.sweeps_executed == 0);
        CHECK(r.stats.recursion_depth == 0);
        CHECK(r.stats.success);
    }
}

TEST_CASE("a total order has one output") {
    // 5 before 4 before ... before 1.
    std::vector<OrderPair> pairs;
    for (Item a = 5; a > 1; --a) pairs.emplace_back(a, a - 1);
    const Poset poset = normalize(close_and_validate(pairs, 5));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(cftp_doubling(poset, 5, seed).original == Permutation{5, 4, 3, 2, 1});
        CHECK(cftp_fixed(poset, 4, seed).original == Permutation{5, 4, 3, 2, 1});
    }
}

TEST_CASE("windows below n - 1 are rejected") {
    const Poset poset = normalize(five_item());
    CHECK_THROWS_AS(cftp_fixed(poset, 3, 1), std::invalid_argument);
    CHECK_NOTHROW(cftp_fixed(poset, 4, 1));
    CHECK_THROWS_AS(cftp_doubling(poset, 0, 1), std::invalid_argument);
}

TEST_CASE("drivers parse by name") {
    CHECK(parse_driver("doubling") == Driver::doubling);
    CHECK(parse_driver("fixed") == Driver::fixed);
    CHECK_FALSE(parse_driver("monotone").has_value());
    CHECK(to_string(Driver::fixed) == "fixed");
}

TEST_CASE("same seed, same sample and counters") {
    const Poset poset = normalize(five_item());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SampleResult a = cftp_doubling(poset, 1, seed);
        const SampleResult b = cftp_doubling(poset, 1, seed);
        CHECK(a.original == b.original);
        CHECK(a.stats == b.stats);
    }
}

TEST_CASE("replays read exactly the forward coins") {
    const Poset poset = normalize(five_item());
    int deep = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::vector<LevelTrace> trace;
        const SampleResult r = cftp_doubling(poset, 1, seed, &trace);
        REQUIRE(trace.size() == static_cast<std::size_t>(r.stats.recursion_depth) + 1);
        std::uint64_t sweeps = 0;
        std::uint64_t bits = 0;
        for (std::size_t level = 0; level < trace.size(); ++level) {
            const LevelTrace& lt = trace[level];
            CHECK(lt.seed == mix_seed(seed, level));
            CHECK(lt.sweeps == (std::uint64_t{1} << level));
            sweeps += lt.sweeps;
            bits += lt.sweeps * 4;
            if (level + 1 < trace.size()) {
                REQUIRE(lt.replay_fingerprint.has_value());
                CHECK(*lt.replay_fingerprint == lt.forward_fingerprint);
                sweeps += lt.sweeps;
            } else {
                CHECK_FALSE(lt.replay_fingerprint.has_value());
            }
        }
        CHECK(r.stats.sweeps_executed == sweeps);
        CHECK(r.stats.bits_consumed == bits);
        deep += r.stats.recursion_depth > 0;
    }
    CHECK(deep > 100);
}

TEST_CASE("coalescence time does not depend on the order") {
    const Poset a = normalize(five_item());
    const Poset b = normalize(five_item_constrained());
    const Poset c = normalize(Relation(5));
    for (const Driver d : {Driver::doubling, Driver::fixed}) {
        const std::uint64_t t = d == Driver::doubling ? 1 : 4;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const RunStats sa = sample(a, d, t, seed).stats;
            const RunStats sb = sample(b, d, t, seed).stats;
            const RunStats sc = sample(c, d, t, seed).stats;
            CHECK(sa.sweeps_executed == sb.sweeps_executed);
            CHECK(sa.recursion_depth == sb.recursion_depth);
            CHECK(sa.bits_consumed == sb.bits_consumed);
            CHECK(sa.bits_consumed == sc.bits_consumed);
        }
    }
}

TEST_CASE("outputs come back in original labels") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Relation rel = random_relation(n, 0.4, rng);
        const Poset poset = normalize(rel);
        const SampleResult r = cftp_doubling(poset, default_t0(n), rng());
        CHECK(is_linear_extension(poset.internal(), r.internal));
        CHECK(is_linear_extension(rel, r.original));
        CHECK(r.original == map_output(r.internal, poset));
    }
}

TEST_CASE("map_output relabels slot by slot") {
    const std::vector<OrderPair> pairs{{3, 1}};
    const Poset poset = normalize(close_and_validate(pairs, 4));
    // Internal 1..4 are original 2, 3, 1, 4.
    CHECK(map_output(Permutation{1, 2, 3, 4}, poset) == Permutation{2, 3, 1, 4});
    CHECK(map_output(Permutation{2, 3, 1, 4}, poset) == Permutation{3, 1, 2, 4});
}

TEST_CASE("relabelled order is sampled uniformly") {
    // Reversed labels force a non-trivial relabelling.
    const std::vector<OrderPair> pairs{{5, 3}, {5, 1}, {4, 3}, {4, 1}, {3, 1}, {2, 1}};
    const Relation rel = close_and_validate(pairs, 5);
    const Poset poset = normalize(rel);
    REQUIRE_FALSE(poset.identity_labels());
    const FrequencyReport report = uniformity_test(poset, Driver::doubling, 5, 8000, 4242, 0);
    CHECK(report.cells.size() == 8);
    CHECK(report.invalid == 0);
    CHECK(report.outside == 0);
    CHECK(report.chi.p_value >= kSignificance);
}

TEST_CASE("run_bounding coalesces with enough sweeps") {
    CHECK(run_bounding(1, 0, 0).is_permutation());
    CHECK_FALSE(run_bounding(5, 3, 9).is_permutation());
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        hits += run_bounding(5, 200, seed).is_permutation();
    }
    CHECK(hits == 100);
}

#include "doctest.h"

#include "lexsamp/cftp.hpp"
#include "lexsamp/chains.hpp"
#include "test_support.hpp"

using namespace lexsamp;
using namespace lexsamp::testing;

namespace {

constexpr Item S = kStar;

// Random reachable bounding state: the initial state pushed through a random
// number of sweeps with random coins.
template <typename Rng>
BoundingState random_bounding_state(const Relation& rel, Rng& rng) {
    const int n = rel.size();
    BoundingState y = initial_bounding_state(n);
    const int sweeps = static_cast<int>(rng() % (3 * n * n + 1));
    for (int s = 0; s < sweeps; ++s) {
        for (int pos = 0; pos + 1 < n; ++pos) bc_step(y, pos, (rng() & 1U) != 0, rel);
    }
    return y;
}

} // namespace

TEST_CASE("adj_step on the five-item order") {
    const Relation rel = five_item();
    Permutation sigma{1, 2, 3, 4, 5};
    CHECK(adj_step(sigma, 2, true, rel));
    CHECK(sigma == Permutation{1, 2, 4, 3, 5});

    sigma = {1, 2, 3, 4, 5};
    CHECK_FALSE(adj_step(sigma, 3, true, rel));
    CHECK(sigma == Permutation{1, 2, 3, 4, 5});

    for (int pos = 0; pos < 4; ++pos) {
        Permutation s{2, 1, 4, 3, 5};
        CHECK_FALSE(adj_step(s, pos, false, rel));
        CHECK(s == Permutation{2, 1, 4, 3, 5});
    }
}

TEST_CASE("bc_step: Star passes an item and is promoted") {
    const Relation rel = five_item();
    BoundingState y{{S, S, S, S, 1}, 1};
    CHECK(bc_step(y, 3, true, rel));
    CHECK(y == BoundingState{{S, S, S, 1, 2}, 2});
}

TEST_CASE("bc_step: coin 0 and forbidden swaps leave the state alone") {
    const Relation rel = five_item();
    const BoundingState start{{S, 2, S, 1, 3}, 3};
    for (int pos = 0; pos < 4; ++pos) {
        BoundingState y = start;
        CHECK_FALSE(bc_step(y, pos, false, rel));
        CHECK(y == start);
    }

    // 1 ⪯ 3 forbids the swap.
    BoundingState blocked{{2, 1, 3, S, 4}, 4};
    REQUIRE(satisfies_invariants(blocked, rel));
    CHECK_FALSE(bc_step(blocked, 1, true, rel));
    CHECK(blocked == BoundingState{{2, 1, 3, S, 4}, 4});

    // Two adjacent Stars never swap.
    BoundingState stars{{S, S, S, S, 1}, 1};
    CHECK_FALSE(bc_step(stars, 0, true, rel));
}

TEST_CASE("sim_step hand-simulated on two items") {
    const Relation rel(2);
    Permutation sigma{1, 2};
    BoundingState y{{S, 1}, 1};
    const CoupledSwaps swaps = sim_step(sigma, y, 0, true, rel);
    CHECK(swaps.bounding);
    CHECK_FALSE(swaps.underlying);
    CHECK(y == BoundingState{{1, 2}, 2});
    CHECK(sigma == Permutation{1, 2});
    CHECK(bounds(y, sigma));
}

TEST_CASE("sim_step never swaps both chains when sigma[i] == r[i+1]") {
    std::mt19937_64 rng(99);
    int seen = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const Poset poset = normalize(random_relation(n, 0.3, rng));
        const Relation& rel = poset.internal();
        const auto all = brute_force_extensions(rel);
        Permutation sigma = all[rng() % all.size()];
        BoundingState y = initial_bounding_state(n);
        const int substeps = static_cast<int>(rng() % (n * n * n));
        for (int s = 0; s < substeps; ++s) {
            const int pos = s % (n - 1);
            if (sigma[pos] == y.r[pos + 1]) {
                ++seen;
                const CoupledSwaps swaps = sim_step(sigma, y, pos, (rng() & 1U) != 0, rel);
                CHECK_FALSE((swaps.underlying && swaps.bounding));
            } else {
                sim_step(sigma, y, pos, (rng() & 1U) != 0, rel);
            }
        }
    }
    CHECK(seen > 1000);
}

TEST_CASE("bounds predicate") {
    const BoundingState loose{{S, S, S, S, 1}, 1};
    for (const auto& sigma : brute_force_extensions(five_item())) {
        CHECK(bounds(loose, sigma));
    }
    CHECK(bounds(BoundingState{{S, 2, S, 1, 3}, 3}, Permutation{2, 1, 4, 3, 5}));
    // Item 2 would sit right of its bound.
    CHECK_FALSE(bounds(BoundingState{{S, 2, S, 1, 3}, 3}, Permutation{1, 4, 2, 3, 5}));
    const BoundingState full{{2, 1, 4, 3, 5}, 5};
    CHECK(bounds(full, Permutation{2, 1, 4, 3, 5}));
    CHECK_FALSE(bounds(full, Permutation{1, 2, 4, 3, 5}));
}

TEST_CASE("bounding-only sweep from the initial state") {
    const Relation rel = five_item();
    BoundingState y = initial_bounding_state(5);
    const std::vector<std::uint8_t> coins{1, 1, 1, 1};
    sweep_bounding(y, coins, rel);
    CHECK(y == BoundingState{{S, S, S, 1, 2}, 2});

    const std::vector<std::uint8_t> zeros{0, 0, 0, 0};
    BoundingState quiet{{S, 2, S, 1, 3}, 3};
    // r(n) holds an item, so nothing moves.
    sweep_bounding(quiet, zeros, rel);
    CHECK(quiet == BoundingState{{S, 2, S, 1, 3}, 3});

    Permutation sigma{2, 1, 4, 3, 5};
    SwapCounters counters;
    sweep_coupled(sigma, quiet, zeros, rel, &counters);
    // sigma[0] == r[1] flips the underlying coin; at slot 3 the flip meets 3 ⪯ 5.
    CHECK(sigma == Permutation{1, 2, 4, 3, 5});
    CHECK(quiet == BoundingState{{S, 2, S, 1, 3}, 3});
    CHECK(counters.substeps == 4);
    CHECK(counters.underlying == 1);
    CHECK(counters.bounding == 0);
}

TEST_CASE("bc_step preserves the bounding invariants") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Poset poset = normalize(random_relation(n, 0.3, rng));
        const Relation& rel = poset.internal();
        BoundingState y = random_bounding_state(rel, rng);
        REQUIRE(satisfies_invariants(y, rel));
        bc_step(y, static_cast<int>(rng() % (n - 1)), (rng() & 1U) != 0, rel);
        CHECK(satisfies_invariants(y, rel));
    }
}

TEST_CASE("coupled trajectories stay bounded after every substep") {
    std::mt19937_64 rng(31337);
    std::uint64_t violations = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Poset poset = normalize(random_relation(n, 0.3, rng));
        const Relation& rel = poset.internal();
        // Any extension is bounded by the initial state; walk the identity a bit.
        Permutation sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        for (int s = 0; s < 3 * n; ++s) {
            adj_step(sigma, static_cast<int>(rng() % (n - 1)), (rng() & 1U) != 0, rel);
        }
        BoundingState y = initial_bounding_state(n);
        REQUIRE(bounds(y, sigma));
        for (int s = 0; s < n * n; ++s) {
            for (int pos = 0; pos + 1 < n; ++pos) {
                sim_step(sigma, y, pos, (rng() & 1U) != 0, rel);
                violations += !bounds(y, sigma);
            }
        }
        CHECK(is_linear_extension(rel, sigma));
        if (y.is_permutation()) CHECK(y.r == sigma);
    }
    CHECK(violations == 0);
}

TEST_CASE("adj_step keeps linear extensions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Relation rel = random_relation(n, 0.4, rng);
        const auto all = brute_force_extensions(rel);
        Permutation sigma = all[rng() % all.size()];
        adj_step(sigma, static_cast<int>(rng() % (n - 1)), true, rel);
        CHECK(is_linear_extension(rel, sigma));
    }
}

TEST_CASE("Star positions depend only on the coins") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Poset a = normalize(random_relation(n, 0.5, rng));
        const Relation b(n);
        BoundingState ya = initial_bounding_state(n);
        BoundingState yb = initial_bounding_state(n);
        for (int s = 0; s < 2 * n * n; ++s) {
            for (int pos = 0; pos + 1 < n; ++pos) {
                const bool coin = (rng() & 1U) != 0;
                bc_step(ya, pos, coin, a.internal());
                bc_step(yb, pos, coin, b);
                REQUIRE(ya.k == yb.k);
                for (int p = 0; p < n; ++p) {
                    REQUIRE((ya.r[p] == kStar) == (yb.r[p] == kStar));
                }
            }
        }
    }
}

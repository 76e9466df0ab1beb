#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lexsamp/poset.hpp"

namespace lexsamp {

/// A set of permutations encoded as a vector over {Star} ∪ items plus the
/// number of active items k. Items 1..k each appear exactly once in r; all
/// other slots hold kStar.
struct BoundingState {
    std::vector<Item> r;
    int k = 0;

    int size() const noexcept { return static_cast<int>(r.size()); }
    bool is_permutation() const noexcept { return k == size(); }

    friend bool operator==(const BoundingState&, const BoundingState&) = default;
};

/// Per-chain tallies of substeps that performed a physical swap.
struct SwapCounters {
    std::uint64_t underlying = 0;
    std::uint64_t bounding = 0;
    std::uint64_t substeps = 0;

    std::uint64_t total_swaps() const noexcept { return underlying + bounding; }
};

// Positions are 0-based: `pos` in 0..n-2 addresses slots pos and pos+1.

/// Underlying adjacent-transposition step. Returns true if a swap happened.
bool adj_step(Permutation& sigma, int pos, bool coin, const Relation& rel);

/// Bounding-chain step: conditional swap under the star-extended order, then
/// promotion of a Star sitting in the last slot to item k+1. Returns true if
/// the swap happened.
bool bc_step(BoundingState& y, int pos, bool coin, const Relation& rel);

struct CoupledSwaps {
    bool underlying = false;
    bool bounding = false;
};

/// Coupled step. The underlying chain uses the flipped coin when
/// sigma[pos] == r[pos+1]. The bounding update is applied before the
/// underlying one; both read the pre-step states.
CoupledSwaps sim_step(Permutation& sigma, BoundingState& y, int pos, bool coin,
                      const Relation& rel);

/// True iff every active item a ≤ k sits in sigma at or left of its slot in r.
bool bounds(const BoundingState& y, std::span<const Item> sigma);

/// Active-item and partial-order invariants of a bounding state.
bool satisfies_invariants(const BoundingState& y, const Relation& rel);

/// One deterministic scan: substeps at pos = 0..n-2 with coins[pos].
void sweep_underlying(Permutation& sigma, std::span<const std::uint8_t> coins,
                      const Relation& rel, SwapCounters* counters = nullptr);
void sweep_bounding(BoundingState& y, std::span<const std::uint8_t> coins, const Relation& rel,
                    SwapCounters* counters = nullptr);
void sweep_coupled(Permutation& sigma, BoundingState& y, std::span<const std::uint8_t> coins,
                   const Relation& rel, SwapCounters* counters = nullptr);

} // namespace lexsamp

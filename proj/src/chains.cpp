#include "lexsamp/chains.hpp"

#include <cassert>
#include <utility>

namespace lexsamp {

bool adj_step(Permutation& sigma, int pos, bool coin, const Relation& rel) {
    if (coin && !rel.precedes(sigma[pos], sigma[pos + 1])) {
        std::swap(sigma[pos], sigma[pos + 1]);
        return true;
    }
    return false;
}

bool bc_step(BoundingState& y, int pos, bool coin, const Relation& rel) {
    bool swapped = false;
    if (coin && !extended_precedes(y.r[pos], y.r[pos + 1], rel)) {
        std::swap(y.r[pos], y.r[pos + 1]);
        swapped = true;
    }
    if (y.r.back() == kStar) {
        y.r.back() = ++y.k;
    }
    return swapped;
}

CoupledSwaps sim_step(Permutation& sigma, BoundingState& y, int pos, bool coin,
                      const Relation& rel) {
    const bool underlying_coin = (sigma[pos] == y.r[pos + 1]) ? !coin : coin;
    CoupledSwaps swaps;
    swaps.bounding = bc_step(y, pos, coin, rel);
    swaps.underlying = adj_step(sigma, pos, underlying_coin, rel);
    return swaps;
}

bool bounds(const BoundingState& y, std::span<const Item> sigma) {
    const int n = y.size();
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<int> slot_in_r(static_cast<std::size_t>(n) + 1, -1);
    for (int p = 0; p < n; ++p) {
        if (y.r[p] != kStar && y.r[p] <= n) slot_in_r[y.r[p]] = p;
    }
    for (int p = 0; p < n; ++p) {
        const Item a = sigma[p];
        if (a < 1 || a > n || a > y.k) continue;
        if (slot_in_r[a] < 0 || p > slot_in_r[a]) return false;
    }
    return true;
}

bool satisfies_invariants(const BoundingState& y, const Relation& rel) {
    const int n = y.size();
    if (n != rel.size() || y.k < 0 || y.k > n) return false;
    std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
    int stars = 0;
    for (int p = 0; p < n; ++p) {
        const Item a = y.r[p];
        if (a == kStar) {
            ++stars;
            continue;
        }
        if (a < 1 || a > y.k || slot[a] >= 0) return false;
        slot[a] = p;
    }
    if (stars != n - y.k) return false;
    for (Item a = 1; a <= y.k; ++a) {
        if (slot[a] < 0) return false;
        for (Item b = 1; b <= y.k; ++b) {
            if (a != b && rel.precedes(a, b) && slot[a] >= slot[b]) return false;
        }
    }
    return true;
}

void sweep_underlying(Permutation& sigma, std::span<const std::uint8_t> coins,
                      const Relation& rel, SwapCounters* counters) {
    for (std::size_t pos = 0; pos < coins.size(); ++pos) {
        const bool swapped = adj_step(sigma, static_cast<int>(pos), coins[pos] != 0, rel);
        if (counters) {
            ++counters->substeps;
            counters->underlying += swapped;
        }
    }
}

void sweep_bounding(BoundingState& y, std::span<const std::uint8_t> coins, const Relation& rel,
                    SwapCounters* counters) {
    for (std::size_t pos = 0; pos < coins.size(); ++pos) {
        const bool swapped = bc_step(y, static_cast<int>(pos), coins[pos] != 0, rel);
        if (counters) {
            ++counters->substeps;
            counters->bounding += swapped;
        }
    }
}

void sweep_coupled(Permutation& sigma, BoundingState& y, std::span<const std::uint8_t> coins,
                   const Relation& rel, SwapCounters* counters) {
    for (std::size_t pos = 0; pos < coins.size(); ++pos) {
        const CoupledSwaps swaps = sim_step(sigma, y, static_cast<int>(pos), coins[pos] != 0, rel);
        assert(bounds(y, sigma));
        if (counters) {
            ++counters->substeps;
            counters->underlying += swaps.underlying;
            counters->bounding += swaps.bounding;
        }
    }
}

} // namespace lexsamp

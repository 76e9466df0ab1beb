#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lexsamp/coin_tape.hpp"
#include "lexsamp/poset.hpp"

namespace lexsamp {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kEnumerationCap = 10;
inline constexpr int kCountingCap = 20;

/// Every linear extension of a relation, in lexicographic order.
struct ExtensionSet {
    std::vector<Permutation> extensions;

    std::size_t count() const noexcept { return extensions.size(); }

    /// Position of `sigma` in the canonical order, if present.
    std::optional<std::size_t> index_of(std::span<const Item> sigma) const;
};

/// Backtracking enumeration. Throws CapExceeded when n > cap.
ExtensionSet enumerate_extensions(const Relation& rel, int cap = kEnumerationCap);

/// Dynamic program over down-sets (2^n states). Throws CapExceeded when n > cap.
std::uint64_t count_extensions(const Relation& rel, int cap = kCountingCap);

/// Exactly uniform member of `set`, indexed with fair bits from `tape`.
Permutation oracle_uniform_sample(const ExtensionSet& set, CoinTape& tape);

Permutation oracle_uniform_sample(const Relation& rel, CoinTape& tape, int cap = kEnumerationCap);

} // namespace lexsamp

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lexsamp/poset.hpp"

namespace lexsamp::testing {

inline std::string fixture(const std::string& name) {
    return std::string(LEXSAMP_FIXTURE_DIR) + "/" + name;
}

inline const std::vector<OrderPair>& five_item_pairs() {
    static const std::vector<OrderPair> pairs{{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}};
    return pairs;
}

inline Relation five_item() { return close_and_validate(five_item_pairs(), 5); }

inline Relation five_item_constrained() {
    auto pairs = five_item_pairs();
    pairs.emplace_back(2, 4);
    return close_and_validate(pairs, 5);
}

/// The eight outputs in the order the reference experiment numbers them.
inline const std::vector<Permutation>& reference_cells() {
    static const std::vector<Permutation> cells{
        {1, 2, 3, 4, 5}, {1, 2, 4, 3, 5}, {1, 4, 2, 3, 5}, {4, 1, 2, 3, 5},
        {2, 1, 3, 4, 5}, {2, 1, 4, 3, 5}, {2, 4, 1, 3, 5}, {4, 2, 1, 3, 5}};
    return cells;
}

/// Random order on n items: each pair of a hidden random ranking is related
/// with probability `density`, then the labels are shuffled by that ranking.
template <typename Rng>
Relation random_relation(int n, double density, Rng& rng) {
    std::vector<Item> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 1);
    std::shuffle(ranking.begin(), ranking.end(), rng);
    std::bernoulli_distribution edge(density);
    std::vector<OrderPair> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (edge(rng)) pairs.emplace_back(ranking[a], ranking[b]);
        }
    }
    return close_and_validate(pairs, n);
}

/// Brute force: filter all n! permutations with the all-pairs predicate.
inline std::vector<Permutation> brute_force_extensions(const Relation& rel) {
    Permutation sigma(static_cast<std::size_t>(rel.size()));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<Permutation> out;
    do {
        if (is_linear_extension(rel, sigma)) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

} // namespace lexsamp::testing

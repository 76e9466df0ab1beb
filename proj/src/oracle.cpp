#include "lexsamp/oracle.hpp"

#include <algorithm>
#include <string>

namespace lexsamp {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    }
}

// Bit b of pred[a] is set when item b+1 strictly precedes item a+1.
std::vector<std::uint32_t> predecessor_masks(const Relation& rel) {
    const int n = rel.size();
    std::vector<std::uint32_t> pred(static_cast<std::size_t>(n), 0);
    for (Item a = 1; a <= n; ++a) {
        for (Item b = 1; b <= n; ++b) {
            if (a != b && rel.precedes(b, a)) pred[a - 1] |= std::uint32_t{1} << (b - 1);
        }
    }
    return pred;
}

void extend(const std::vector<std::uint32_t>& pred, std::uint32_t placed, Permutation& prefix,
            std::vector<Permutation>& out) {
    const int n = static_cast<int>(pred.size());
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    // Ascending item order yields lexicographic output.
    for (int a = 0; a < n; ++a) {
        const std::uint32_t bit = std::uint32_t{1} << a;
        if ((placed & bit) == 0 && (pred[a] & ~placed) == 0) {
            prefix.push_back(a + 1);
            extend(pred, placed | bit, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::optional<std::size_t> ExtensionSet::index_of(std::span<const Item> sigma) const {
    const auto it = std::lower_bound(
        extensions.begin(), extensions.end(), sigma, [](const Permutation& lhs, auto rhs) {
            return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
        });
    if (it == extensions.end() || !std::equal(it->begin(), it->end(), sigma.begin(), sigma.end())) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - extensions.begin());
}

ExtensionSet enumerate_extensions(const Relation& rel, int cap) {
    check_cap(rel.size(), std::min(cap, 31), "enumerate_extensions");
    ExtensionSet set;
    Permutation prefix;
    prefix.reserve(static_cast<std::size_t>(rel.size()));
    extend(predecessor_masks(rel), 0, prefix, set.extensions);
    return set;
}

std::uint64_t count_extensions(const Relation& rel, int cap) {
    const int n = rel.size();
    check_cap(n, std::min(cap, 30), "count_extensions");
    const auto pred = predecessor_masks(rel);
    // ways[S] = number of orderings of down-set S that respect the relation.
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
        if (ways[set] == 0) continue;
        for (int a = 0; a < n; ++a) {
            const std::uint32_t bit = std::uint32_t{1} << a;
            if ((set & bit) == 0 && (pred[a] & ~set) == 0) ways[set | bit] += ways[set];
        }
    }
    return ways.back();
}

Permutation oracle_uniform_sample(const ExtensionSet& set, CoinTape& tape) {
    return set.extensions.at(tape.uniform_below(set.count()));
}

Permutation oracle_uniform_sample(const Relation& rel, CoinTape& tape, int cap) {
    return oracle_uniform_sample(enumerate_extensions(rel, cap), tape);
}

} // namespace lexsamp

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexsamp {

/// Item labels are 1-based. Label 0 is reserved for the Star placeholder of
/// the bounding chain and never names a real item.
using Item = std::int32_t;
inline constexpr Item kStar = 0;

/// slots[p] is the item in position p (positions are 0-based).
using Permutation = std::vector<Item>;

using OrderPair = std::pair<Item, Item>;

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class CycleError : public std::runtime_error {
public:
    CycleError(std::string what, std::vector<Item> cycle)
        : std::runtime_error(std::move(what)), cycle_(std::move(cycle)) {}

    /// Items of one offending cycle, first item repeated at the end.
    const std::vector<Item>& cycle() const noexcept { return cycle_; }

private:
    std::vector<Item> cycle_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Dense precedence table over items 1..n; precedes(i, j) means i ⪯ j.
class Relation {
public:
    /// The discrete order (reflexive only) on n items.
    explicit Relation(int n);

    int size() const noexcept { return n_; }

    bool precedes(Item a, Item b) const noexcept {
        return table_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)] != 0;
    }

    void set(Item a, Item b, bool value = true) noexcept {
        table_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)] = value ? 1 : 0;
    }

    bool is_reflexive() const noexcept;
    bool is_antisymmetric() const noexcept;
    bool is_transitive() const noexcept;

    /// Every pair i ⪯ j with i != j, row-major.
    std::vector<OrderPair> pairs() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

/// Reflexive-transitive closure of `pairs` over items 1..n.
/// Throws IndexError for labels outside 1..n and CycleError when the closure
/// is not antisymmetric.
Relation close_and_validate(std::span<const OrderPair> pairs, int n);

/// Star ⪯ x and x ⪯ Star are false for every item x, Star ⪯ Star is true;
/// item-item queries delegate to the relation.
inline bool extended_precedes(Item a, Item b, const Relation& rel) noexcept {
    if (a == kStar || b == kStar) {
        return a == b;
    }
    return rel.precedes(a, b);
}

/// A validated order relabeled so that the identity permutation of internal
/// labels is a linear extension.
class Poset {
public:
    Poset(Relation original, Relation internal, std::vector<Item> to_internal,
          std::vector<Item> to_original);

    int size() const noexcept { return internal_.size(); }
    const Relation& internal() const noexcept { return internal_; }
    const Relation& original() const noexcept { return original_; }

    Item to_internal(Item original_label) const { return to_internal_.at(original_label); }
    Item to_original(Item internal_label) const { return to_original_.at(internal_label); }

    bool identity_labels() const noexcept;

private:
    Relation original_;
    Relation internal_;
    // Indexed by label; slot 0 unused.
    std::vector<Item> to_internal_;
    std::vector<Item> to_original_;
};

/// Topological relabeling; among incomparable items the smaller original label
/// comes first, so an already upper-triangular relation maps to itself.
Poset normalize(const Relation& relation);

/// Checks every position pair i < j for sigma[j] ⪯ sigma[i]. Also rejects
/// sequences that are not permutations of 1..n.
bool is_linear_extension(const Relation& rel, std::span<const Item> sigma);

inline bool is_linear_extension(const Poset& poset, std::span<const Item> sigma) {
    return is_linear_extension(poset.internal(), sigma);
}

bool is_permutation_of_items(std::span<const Item> sigma, int n);

/// Text format: `n <count>` then one `<i> <j>` pair per line meaning i ⪯ j.
/// `#` starts a comment, blank lines are ignored.
Relation parse_relation(std::istream& in);
Relation read_relation_file(const std::filesystem::path& path);

std::string format_relation(const Relation& rel);

} // namespace lexsamp

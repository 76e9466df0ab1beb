#include "lexsamp/poset.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <queue>
#include <sstream>

namespace lexsamp {

Relation::Relation(int n) : n_(n), table_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) {
        throw std::invalid_argument("relation needs at least one item");
    }
    for (Item i = 1; i <= n; ++i) {
        set(i, i);
    }
}

bool Relation::is_reflexive() const noexcept {
    for (Item i = 1; i <= n_; ++i) {
        if (!precedes(i, i)) return false;
    }
    return true;
}

bool Relation::is_antisymmetric() const noexcept {
    for (Item i = 1; i <= n_; ++i) {
        for (Item j = i + 1; j <= n_; ++j) {
            if (precedes(i, j) && precedes(j, i)) return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const noexcept {
    for (Item i = 1; i <= n_; ++i) {
        for (Item j = 1; j <= n_; ++j) {
            if (!precedes(i, j)) continue;
            for (Item k = 1; k <= n_; ++k) {
                if (precedes(j, k) && !precedes(i, k)) return false;
            }
        }
    }
    return true;
}

std::vector<OrderPair> Relation::pairs() const {
    std::vector<OrderPair> out;
    for (Item i = 1; i <= n_; ++i) {
        for (Item j = 1; j <= n_; ++j) {
            if (i != j && precedes(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

// Path from `from` to `to` along the raw input edges (BFS), inclusive.
std::vector<Item> find_path(const std::vector<std::vector<Item>>& adjacency, Item from, Item to) {
    std::vector<Item> parent(adjacency.size(), -1);
    std::queue<Item> frontier;
    frontier.push(from);
    parent[from] = from;
    while (!frontier.empty()) {
        const Item u = frontier.front();
        frontier.pop();
        if (u == to) break;
        for (Item v : adjacency[u]) {
            if (parent[v] < 0) {
                parent[v] = u;
                frontier.push(v);
            }
        }
    }
    std::vector<Item> path;
    for (Item v = to; v != from; v = parent[v]) {
        path.push_back(v);
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

Relation close_and_validate(std::span<const OrderPair> pairs, int n) {
    Relation rel(n);
    std::vector<std::vector<Item>> adjacency(static_cast<std::size_t>(n) + 1);
    for (const auto& [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n) {
            throw IndexError("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") has an item outside 1.." + std::to_string(n));
        }
        rel.set(a, b);
        if (a != b) adjacency[a].push_back(b);
    }

    // Warshall closure.
    for (Item k = 1; k <= n; ++k) {
        for (Item i = 1; i <= n; ++i) {
            if (!rel.precedes(i, k)) continue;
            for (Item j = 1; j <= n; ++j) {
                if (rel.precedes(k, j)) rel.set(i, j);
            }
        }
    }

    for (Item i = 1; i <= n; ++i) {
        for (Item j = i + 1; j <= n; ++j) {
            if (rel.precedes(i, j) && rel.precedes(j, i)) {
                std::vector<Item> cycle = find_path(adjacency, i, j);
                std::vector<Item> back = find_path(adjacency, j, i);
                cycle.insert(cycle.end(), back.begin() + 1, back.end());
                std::ostringstream msg;
                msg << "order contains a cycle:";
                for (std::size_t p = 0; p < cycle.size(); ++p) {
                    msg << (p == 0 ? " " : " -> ") << cycle[p];
                }
                throw CycleError(msg.str(), std::move(cycle));
            }
        }
    }
    return rel;
}

Poset::Poset(Relation original, Relation internal, std::vector<Item> to_internal,
             std::vector<Item> to_original)
    : original_(std::move(original)),
      internal_(std::move(internal)),
      to_internal_(std::move(to_internal)),
      to_original_(std::move(to_original)) {}

bool Poset::identity_labels() const noexcept {
    for (Item i = 1; i <= size(); ++i) {
        if (to_internal_[i] != i) return false;
    }
    return true;
}

Poset normalize(const Relation& relation) {
    const int n = relation.size();
    std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
    for (Item i = 1; i <= n; ++i) {
        for (Item j = 1; j <= n; ++j) {
            if (i != j && relation.precedes(i, j)) ++indegree[j];
        }
    }

    // Kahn's algorithm, smallest available original label first.
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (Item i = 1; i <= n; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }
    std::vector<Item> to_internal(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Item> to_original(static_cast<std::size_t>(n) + 1, 0);
    Item next = 1;
    while (!ready.empty()) {
        const Item u = ready.top();
        ready.pop();
        to_internal[u] = next;
        to_original[next] = u;
        ++next;
        for (Item v = 1; v <= n; ++v) {
            if (v != u && relation.precedes(u, v) && --indegree[v] == 0) ready.push(v);
        }
    }
    if (next != n + 1) {
        throw std::invalid_argument("normalize: relation is not acyclic");
    }

    Relation internal(n);
    for (Item i = 1; i <= n; ++i) {
        for (Item j = 1; j <= n; ++j) {
            if (relation.precedes(i, j)) internal.set(to_internal[i], to_internal[j]);
        }
    }
    return Poset(relation, std::move(internal), std::move(to_internal), std::move(to_original));
}

bool is_permutation_of_items(std::span<const Item> sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Item a : sigma) {
        if (a < 1 || a > n || seen[a]) return false;
        seen[a] = true;
    }
    return true;
}

bool is_linear_extension(const Relation& rel, std::span<const Item> sigma) {
    if (!is_permutation_of_items(sigma, rel.size())) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (rel.precedes(sigma[j], sigma[i])) return false;
        }
    }
    return true;
}

namespace {

bool parse_label(const std::string& token, long long& value) {
    std::size_t used = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == token.size();
}

} // namespace

Relation parse_relation(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = 0;
    std::vector<OrderPair> pairs;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string token; fields >> token;) {
            tokens.push_back(std::move(token));
        }
        if (tokens.empty()) continue;

        long long first = 0;
        long long second = 0;
        if (n == 0) {
            if (tokens.size() != 2 || tokens[0] != "n" || !parse_label(tokens[1], second)) {
                throw ParseError("expected header `n <count>`", line_no);
            }
            if (second < 1 || second > 100'000) {
                throw ParseError("item count must be in 1..100000", line_no);
            }
            n = static_cast<int>(second);
            continue;
        }
        if (tokens.size() != 2 || !parse_label(tokens[0], first) ||
            !parse_label(tokens[1], second)) {
            throw ParseError("expected `<i> <j>`", line_no);
        }
        if (first < 1 || first > n || second < 1 || second > n) {
            throw ParseError("item out of range 1.." + std::to_string(n), line_no);
        }
        pairs.emplace_back(static_cast<Item>(first), static_cast<Item>(second));
    }
    if (n == 0) {
        throw ParseError("missing header `n <count>`", line_no);
    }
    return close_and_validate(pairs, n);
}

Relation read_relation_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return parse_relation(in);
}

std::string format_relation(const Relation& rel) {
    std::ostringstream out;
    out << "n " << rel.size() << '\n';
    for (const auto& [a, b] : rel.pairs()) {
        out << a << ' ' << b << '\n';
    }
    return out.str();
}

} // namespace lexsamp

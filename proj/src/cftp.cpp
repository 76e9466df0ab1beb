#include "lexsamp/cftp.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "lexsamp/coin_tape.hpp"

namespace lexsamp {

namespace {

constexpr int kMaxLevels = 1 << 20;
constexpr std::uint64_t kMaxWindow = std::uint64_t{1} << 40;

struct Schedule {
    std::uint64_t first;
    bool doubling;

    std::uint64_t window(int level) const {
        if (!doubling) return first;
        if (level >= 63 || first > (kMaxWindow >> level)) {
            throw std::runtime_error("cftp: doubling window overflow at level " +
                                     std::to_string(level));
        }
        return first << level;
    }
};

SampleResult run_cftp(const Poset& poset, Schedule schedule, std::uint64_t seed,
                      std::vector<LevelTrace>* trace) {
    const int n = poset.size();
    const Relation& rel = poset.internal();
    SampleResult result;
    if (trace) trace->clear();

    if (n == 1) {
        result.internal = {1};
        result.original = map_output(result.internal, poset);
        result.stats.success = true;
        return result;
    }

    std::vector<std::uint8_t> coins(static_cast<std::size_t>(n) - 1);
    SwapCounters counters;
    BoundingState y;

    // Forward passes, outermost level first, until one coalesces.
    int deepest = 0;
    for (;; ++deepest) {
        if (deepest >= kMaxLevels) {
            throw std::runtime_error("cftp: no coalescence after " + std::to_string(kMaxLevels) +
                                     " levels");
        }
        const std::uint64_t t = schedule.window(deepest);
        CoinTape tape(mix_seed(seed, static_cast<std::uint64_t>(deepest)));
        y = initial_bounding_state(n);
        for (std::uint64_t s = 0; s < t; ++s) {
            tape.fill(coins);
            sweep_bounding(y, coins, rel, &counters);
        }
        result.stats.bits_consumed += tape.consumed();
        result.stats.sweeps_executed += t;
        if (trace) trace->push_back({tape.seed(), t, tape.fingerprint(), std::nullopt});
        if (y.is_permutation()) break;
    }

    // Replays, deepest unfinished level first, each starting from the sample
    // produced by the level below it.
    Permutation sigma = y.r;
    for (int level = deepest - 1; level >= 0; --level) {
        const std::uint64_t t = schedule.window(level);
        CoinTape tape(mix_seed(seed, static_cast<std::uint64_t>(level)));
        y = initial_bounding_state(n);
        for (std::uint64_t s = 0; s < t; ++s) {
            tape.fill(coins);
            sweep_coupled(sigma, y, coins, rel, &counters);
        }
        result.stats.sweeps_executed += t;
        if (trace) (*trace)[level].replay_fingerprint = tape.fingerprint();
    }

    result.stats.swap_ops = counters.total_swaps();
    result.stats.substep_calls = counters.substeps;
    result.stats.recursion_depth = deepest;
    result.stats.success = true;
    result.internal = std::move(sigma);
    result.original = map_output(result.internal, poset);
    return result;
}

} // namespace

std::string_view to_string(Driver driver) noexcept {
    return driver == Driver::doubling ? "doubling" : "fixed";
}

std::optional<Driver> parse_driver(std::string_view name) noexcept {
    if (name == "doubling") return Driver::doubling;
    if (name == "fixed") return Driver::fixed;
    return std::nullopt;
}

BoundingState initial_bounding_state(int n) {
    if (n < 1) {
        throw std::invalid_argument("initial_bounding_state: n must be positive");
    }
    BoundingState y;
    y.r.assign(static_cast<std::size_t>(n), kStar);
    y.r.back() = 1;
    y.k = 1;
    return y;
}

std::uint64_t recommended_t(int n) noexcept {
    if (n < 2) return 1;
    const auto m = static_cast<std::uint64_t>(n);
    const auto log2_ceil = static_cast<std::uint64_t>(std::bit_width(m - 1));
    return ((m * m - m + 3) * log2_ceil + 1) / 2;
}

SampleResult cftp_fixed(const Poset& poset, std::uint64_t t, std::uint64_t seed,
                        std::vector<LevelTrace>* trace) {
    const auto floor = static_cast<std::uint64_t>(poset.size() > 1 ? poset.size() - 1 : 1);
    if (t < floor) {
        throw std::invalid_argument("cftp_fixed: t must be at least max(1, n - 1) = " +
                                    std::to_string(floor));
    }
    return run_cftp(poset, {t, false}, seed, trace);
}

SampleResult cftp_doubling(const Poset& poset, std::uint64_t t0, std::uint64_t seed,
                           std::vector<LevelTrace>* trace) {
    if (t0 < 1) {
        throw std::invalid_argument("cftp_doubling: t0 must be at least 1");
    }
    return run_cftp(poset, {t0, true}, seed, trace);
}

SampleResult sample(const Poset& poset, Driver driver, std::uint64_t t, std::uint64_t seed,
                    std::vector<LevelTrace>* trace) {
    return driver == Driver::doubling ? cftp_doubling(poset, t, seed, trace)
                                      : cftp_fixed(poset, t, seed, trace);
}

Permutation map_output(std::span<const Item> internal, const Poset& poset) {
    Permutation out;
    out.reserve(internal.size());
    for (Item a : internal) {
        out.push_back(poset.to_original(a));
    }
    return out;
}

BoundingState run_bounding(int n, std::uint64_t t, std::uint64_t seed) {
    BoundingState y = initial_bounding_state(n);
    if (n == 1) return y;
    const Relation antichain(n);
    std::vector<std::uint8_t> coins(static_cast<std::size_t>(n) - 1);
    CoinTape tape(seed);
    for (std::uint64_t s = 0; s < t; ++s) {
        tape.fill(coins);
        sweep_bounding(y, coins, antichain, nullptr);
    }
    return y;
}

} // namespace lexsamp

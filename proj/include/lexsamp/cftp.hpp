#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexsamp/chains.hpp"
#include "lexsamp/poset.hpp"

namespace lexsamp {

/// Counters for one sampling run.
struct RunStats {
    std::uint64_t sweeps_executed = 0;  ///< forward and replay sweeps, all levels
    std::uint64_t bits_consumed = 0;    ///< fair bits materialized; replays not counted
    std::uint64_t swap_ops = 0;         ///< substeps with a physical swap, per chain
    std::uint64_t substep_calls = 0;    ///< bc_step and sim_step invocations
    int recursion_depth = 0;            ///< levels below the top call
    bool success = false;               ///< final bounding state is a permutation

    friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Per-level record, outermost level first. Fingerprints hash the coin bits
/// drawn in the bounding-only pass and in the coupled replay.
struct LevelTrace {
    std::uint64_t seed = 0;
    std::uint64_t sweeps = 0;
    std::uint64_t forward_fingerprint = 0;
    std::optional<std::uint64_t> replay_fingerprint;
};

struct SampleResult {
    Permutation internal;  ///< internal labels
    Permutation original;  ///< original labels
    RunStats stats;
};

enum class Driver { doubling, fixed };

std::string_view to_string(Driver driver) noexcept;
std::optional<Driver> parse_driver(std::string_view name) noexcept;

/// ((*, ..., *, 1), 1).
BoundingState initial_bounding_state(int n);

/// ceil((n^2 - n + 3) * ceil(log2 n) / 2) sweeps; 1 for n < 2.
std::uint64_t recommended_t(int n) noexcept;

/// Default starting window for the doubling driver.
inline std::uint64_t default_t0(int n) noexcept { return n > 1 ? static_cast<std::uint64_t>(n) : 1; }

/// CFTP with the same window t at every level. Level l draws its coins from
/// CoinTape(mix_seed(seed, l)) and replays them from a fresh tape with the
/// same seed. Requires t >= n - 1 (fewer sweeps can never promote every Star).
SampleResult cftp_fixed(const Poset& poset, std::uint64_t t, std::uint64_t seed,
                        std::vector<LevelTrace>* trace = nullptr);

/// CFTP whose window doubles at each deeper level: t0, 2*t0, 4*t0, ...
SampleResult cftp_doubling(const Poset& poset, std::uint64_t t0, std::uint64_t seed,
                           std::vector<LevelTrace>* trace = nullptr);

SampleResult sample(const Poset& poset, Driver driver, std::uint64_t t, std::uint64_t seed,
                    std::vector<LevelTrace>* trace = nullptr);

/// Internal labels to original labels, slot by slot.
Permutation map_output(std::span<const Item> internal, const Poset& poset);

/// Runs `t` bounding-only sweeps from the initial state with coins from
/// CoinTape(seed). Star motion ignores the order, so only n matters.
BoundingState run_bounding(int n, std::uint64_t t, std::uint64_t seed);

} // namespace lexsamp

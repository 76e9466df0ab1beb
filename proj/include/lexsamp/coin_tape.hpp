#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace lexsamp {

/// SplitMix64 finalizer applied to seed + (index + 1) * 0x9E3779B97F4A7C15.
/// Used for every derived stream: recursion levels, replicates, workers.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Replayable stream of fair bits.
///
/// Bits come from std::mt19937_64 seeded with the tape seed, taken
/// most-significant bit first from each 64-bit output word. Constructing a
/// second tape from the same seed replays the identical sequence on every
/// platform, since mt19937_64 output is fixed by the standard.
class CoinTape {
public:
    static constexpr std::string_view kGenerator = "mt19937_64/msb-first";

    explicit CoinTape(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    bool next() {
        if (remaining_ == 0) {
            word_ = engine_();
            remaining_ = 64;
        }
        --remaining_;
        const bool bit = ((word_ >> remaining_) & 1U) != 0;
        ++consumed_;
        fingerprint_ = (fingerprint_ ^ (bit ? 0x31U : 0x30U)) * 0x100000001B3ULL;
        return bit;
    }

    /// Writes one coin (0 or 1) per element.
    void fill(std::span<std::uint8_t> coins) {
        for (auto& c : coins) {
            c = next() ? 1 : 0;
        }
    }

    /// Uniform integer in [0, bound) by rejection on ceil(log2 bound) bits.
    std::uint64_t uniform_below(std::uint64_t bound);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t consumed() const noexcept { return consumed_; }

    /// FNV-1a over the bits drawn so far; equal streams give equal values.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t word_ = 0;
    int remaining_ = 0;
    std::uint64_t consumed_ = 0;
    std::uint64_t fingerprint_ = 0xCBF29CE484222325ULL;
};

} // namespace lexsamp

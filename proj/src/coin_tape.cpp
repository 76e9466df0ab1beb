#include "lexsamp/coin_tape.hpp"

#include <bit>
#include <stdexcept>

namespace lexsamp {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t CoinTape::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    if (bound == 1) return 0;
    const int bits = std::bit_width(bound - 1);
    for (;;) {
        std::uint64_t value = 0;
        for (int b = 0; b < bits; ++b) {
            value = (value << 1) | (next() ? 1U : 0U);
        }
        if (value < bound) return value;
    }
}

} // namespace lexsamp

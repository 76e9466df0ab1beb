#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexsamp/cftp.hpp"

namespace lexsamp::cli {

enum class Command { sample, count, test, bench, tau };
enum class Format { text, json, csv };

struct RunConfig {
    Command command = Command::sample;
    std::string input;
    std::string reference;             ///< `test` only: poset whose extensions define the cells
    std::optional<std::uint64_t> seed;  ///< falls back to LEXSAMP_SEED, then OS entropy
    std::uint64_t samples = 0;          ///< 0 picks the per-command default
    std::optional<std::uint64_t> t0;    ///< doubling: first window (default n); fixed: window
    Driver driver = Driver::doubling;
    Format format = Format::text;
    int n = 0;                          ///< `tau` without an input file
    unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCapExceeded = 2;

/// Parses argv (argv[0] is the program name) and runs the command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace lexsamp::cli

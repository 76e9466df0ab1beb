#include "lexsamp/stats.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "lexsamp/chains.hpp"
#include "lexsamp/coin_tape.hpp"
#include "lexsamp/parallel.hpp"

namespace lexsamp {

double chi_square_sf(double x, int dof) {
    if (dof <= 0) return 1.0;
    if (!(x > 0.0)) return 1.0;
    if (std::isinf(x)) return 0.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

ChiSquare chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> expected_prob) {
    if (observed.size() != expected_prob.size()) {
        throw std::invalid_argument("chi_square_test: size mismatch");
    }
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    ChiSquare out;
    int live = 0;
    for (std::size_t c = 0; c < observed.size(); ++c) {
        if (expected_prob[c] <= 0.0) {
            if (observed[c] != 0) {
                out.statistic = std::numeric_limits<double>::infinity();
            }
            continue;
        }
        ++live;
        const double expected = total * expected_prob[c];
        const double diff = static_cast<double>(observed[c]) - expected;
        if (std::isfinite(out.statistic)) out.statistic += diff * diff / expected;
    }
    out.dof = std::max(0, live - 1);
    if (std::isinf(out.statistic)) {
        out.p_value = 0.0;
    } else if (out.dof == 0) {
        out.statistic = 0.0;
        out.p_value = 1.0;
    } else {
        out.p_value = chi_square_sf(out.statistic, out.dof);
    }
    return out;
}

FrequencyReport uniformity_test(const Relation& target, const ExtensionSet& cells,
                                const Sampler& sampler, std::uint64_t trials, unsigned threads) {
    FrequencyReport report;
    report.cells = cells.extensions;
    report.trials = trials;
    report.observed.assign(cells.count(), 0);
    report.expected.assign(cells.count(), 0.0);

    std::size_t live = 0;
    for (const auto& cell : cells.extensions) live += is_linear_extension(target, cell);
    for (std::size_t c = 0; c < cells.count(); ++c) {
        if (is_linear_extension(target, cells.extensions[c])) {
            report.expected[c] = 1.0 / static_cast<double>(live);
        }
    }

    constexpr auto kOutside = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> bin(trials, kOutside);
    std::vector<std::uint8_t> valid(trials, 0);
    parallel_for(trials, threads, [&](std::uint64_t i) {
        const Permutation sigma = sampler(i);
        valid[i] = is_linear_extension(target, sigma) ? 1 : 0;
        bin[i] = cells.index_of(sigma).value_or(kOutside);
    });
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (bin[i] == kOutside) {
            ++report.outside;
        } else {
            ++report.observed[bin[i]];
        }
        report.invalid += valid[i] == 0;
    }
    report.chi = chi_square_test(report.observed, report.expected);
    if (report.outside != 0) {
        report.chi.p_value = 0.0;
    }
    return report;
}

FrequencyReport uniformity_test(const Poset& poset, Driver driver, std::uint64_t t,
                                std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                const Relation* reference) {
    if (reference && reference->size() != poset.size()) {
        throw std::invalid_argument("uniformity_test: reference has a different item count");
    }
    const ExtensionSet cells = enumerate_extensions(reference ? *reference : poset.original());
    const Sampler sampler = [&](std::uint64_t i) {
        return sample(poset, driver, t, mix_seed(seed, i)).original;
    };
    return uniformity_test(poset.original(), cells, sampler, trials, threads);
}

FrequencyReport stationarity_test(const Relation& rel, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads) {
    const ExtensionSet cells = enumerate_extensions(rel);
    const int n = rel.size();
    const Sampler sampler = [&](std::uint64_t i) {
        CoinTape tape(mix_seed(seed, i));
        Permutation sigma = oracle_uniform_sample(cells, tape);
        std::vector<std::uint8_t> coins(static_cast<std::size_t>(std::max(n - 1, 0)));
        tape.fill(coins);
        sweep_underlying(sigma, coins, rel);
        return sigma;
    };
    return uniformity_test(rel, cells, sampler, trials, threads);
}

double TauSample::mean() const {
    if (tau.empty()) return 0.0;
    double sum = 0.0;
    for (auto v : tau) sum += static_cast<double>(v);
    return sum / static_cast<double>(tau.size());
}

double TauSample::std_error() const {
    if (tau.size() < 2) return 0.0;
    const double m = mean();
    double ss = 0.0;
    for (auto v : tau) {
        const double d = static_cast<double>(v) - m;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(tau.size() - 1));
    return sd / std::sqrt(static_cast<double>(tau.size()));
}

double TauSample::tail_fraction(double threshold) const {
    if (tau.empty()) return 0.0;
    const auto hits = std::count_if(tau.begin(), tau.end(),
                                    [&](std::uint64_t v) { return static_cast<double>(v) >= threshold; });
    return static_cast<double>(hits) / static_cast<double>(tau.size());
}

double tau_mean_bound(int n) noexcept {
    const double m = n;
    return (m * m - m + 2.0) / 2.0;
}

double tau_tail_threshold(int n) noexcept {
    const double m = n;
    return (m * m - m + 3.0) / 2.0;
}

namespace {

// Follows the Star that starts in slot 0 until it is promoted. on_sweep gets
// the 0-based slot at the start of each sweep and the slot at its end (n - 1
// when promoted). Returns the number of sweeps.
template <typename OnSweep>
std::uint64_t follow_star(const Relation& rel, CoinTape& tape, OnSweep&& on_sweep) {
    const int n = rel.size();
    BoundingState y = initial_bounding_state(n);
    std::vector<std::uint8_t> coins(static_cast<std::size_t>(n) - 1);
    int tracked = 0;
    for (std::uint64_t sweep = 1;; ++sweep) {
        const int start = tracked;
        tape.fill(coins);
        for (int pos = 0; pos + 1 < n; ++pos) {
            const bool coin = coins[pos] != 0;
            if (coin && (tracked == pos || tracked == pos + 1)) {
                tracked = tracked == pos ? pos + 1 : pos;
            }
            bc_step(y, pos, coin, rel);
            if (tracked == n - 1) {
                on_sweep(start, tracked);
                return sweep;
            }
            assert(y.r[tracked] == kStar);
        }
        on_sweep(start, tracked);
    }
}

} // namespace

TauSample measure_tau(int n, std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
    if (n < 2) {
        throw std::invalid_argument("measure_tau: n must be at least 2");
    }
    const Relation antichain(n);
    TauSample sample;
    sample.n = n;
    sample.tau.assign(replicates, 0);
    parallel_for(replicates, threads, [&](std::uint64_t i) {
        CoinTape tape(mix_seed(seed, i));
        sample.tau[i] = follow_star(antichain, tape, [](int, int) {});
    });
    return sample;
}

DisplacementHistogram star_displacements(int n, std::uint64_t replicates, std::uint64_t seed) {
    if (n < kDisplacementTail + 2) {
        throw std::invalid_argument("star_displacements: n too small for the tail bin");
    }
    const Relation antichain(n);
    DisplacementHistogram hist;
    hist.interior.assign(kDisplacementTail + 2, 0);
    hist.boundary.assign(kDisplacementTail + 2, 0);
    for (std::uint64_t i = 0; i < replicates; ++i) {
        CoinTape tape(mix_seed(seed, i));
        follow_star(antichain, tape, [&](int start, int end) {
            if ((n - 1) - start < kDisplacementTail) return;
            const int delta = end - start;
            const int bin = std::min(delta, kDisplacementTail) + 1;
            (start == 0 ? hist.boundary : hist.interior)[bin] += 1;
        });
    }
    return hist;
}

std::vector<double> interior_displacement_law() {
    std::vector<double> law(kDisplacementTail + 2);
    for (int delta = -1; delta < kDisplacementTail; ++delta) {
        law[delta + 1] = std::ldexp(1.0, -(delta + 2));
    }
    law.back() = std::ldexp(1.0, -(kDisplacementTail + 1));
    return law;
}

std::vector<double> boundary_displacement_law() {
    std::vector<double> law(kDisplacementTail + 2, 0.0);
    for (int delta = 0; delta < kDisplacementTail; ++delta) {
        law[delta + 1] = std::ldexp(1.0, -(delta + 1));
    }
    law.back() = std::ldexp(1.0, -kDisplacementTail);
    return law;
}

std::vector<SuccessPoint> success_curve(int n, std::span<const std::uint64_t> t_grid,
                                        std::uint64_t replicates, std::uint64_t seed,
                                        unsigned threads) {
    std::vector<SuccessPoint> curve;
    curve.reserve(t_grid.size());
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        const std::uint64_t t = t_grid[j];
        const std::uint64_t grid_seed = mix_seed(seed, j);
        std::vector<std::uint8_t> hit(replicates, 0);
        parallel_for(replicates, threads, [&](std::uint64_t i) {
            hit[i] = run_bounding(n, t, mix_seed(grid_seed, i)).is_permutation() ? 1 : 0;
        });
        curve.push_back({t, replicates,
                         static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), 1))});
    }
    return curve;
}

namespace {

template <typename Field>
Summary summarize(const std::vector<RunStats>& runs, Field field) {
    Summary s;
    if (runs.empty()) return s;
    double sum = 0.0;
    for (const auto& run : runs) {
        const auto v = static_cast<std::uint64_t>(field(run));
        sum += static_cast<double>(v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(runs.size());
    return s;
}

} // namespace

CostReport cost_report(const Poset& poset, Driver driver, std::uint64_t t, std::uint64_t runs,
                       std::uint64_t seed, unsigned threads) {
    CostReport report;
    report.n = poset.size();
    report.driver = driver;
    report.t = t;
    report.runs.resize(runs);
    parallel_for(runs, threads, [&](std::uint64_t i) {
        report.runs[i] = sample(poset, driver, t, mix_seed(seed, i)).stats;
    });
    report.bits = summarize(report.runs, [](const RunStats& r) { return r.bits_consumed; });
    report.swap_ops = summarize(report.runs, [](const RunStats& r) { return r.swap_ops; });
    report.substep_calls = summarize(report.runs, [](const RunStats& r) { return r.substep_calls; });
    report.sweeps = summarize(report.runs, [](const RunStats& r) { return r.sweeps_executed; });
    report.depth = summarize(report.runs, [](const RunStats& r) { return r.recursion_depth; });
    const double n = report.n;
    const double cube_log = n * n * n * std::log(n);
    report.bits_bound = 1.83 * cube_log;
    report.ops_bound = 2.75 * cube_log;
    return report;
}

BoundingCheck check_coupled_bounds(const Relation& internal, std::uint64_t sweeps,
                                   std::uint64_t seed) {
    const int n = internal.size();
    BoundingCheck check;
    if (n < 2) return check;
    const ExtensionSet extensions = enumerate_extensions(internal);
    CoinTape tape(seed);
    std::vector<std::uint8_t> coins(static_cast<std::size_t>(n) - 1);
    Permutation sigma = oracle_uniform_sample(extensions, tape);
    BoundingState y = initial_bounding_state(n);
    for (std::uint64_t s = 0; s < sweeps; ++s) {
        tape.fill(coins);
        for (int pos = 0; pos + 1 < n; ++pos) {
            sim_step(sigma, y, pos, coins[pos] != 0, internal);
            ++check.substeps;
            check.bound_violations += !bounds(y, sigma);
            check.invariant_violations += !satisfies_invariants(y, internal);
        }
        if (y.is_permutation()) {
            ++check.restarts;
            sigma = oracle_uniform_sample(extensions, tape);
            y = initial_bounding_state(n);
        }
    }
    return check;
}

} // namespace lexsamp

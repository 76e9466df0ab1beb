#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lexsamp/cftp.hpp"
#include "lexsamp/oracle.hpp"
#include "lexsamp/poset.hpp"

namespace lexsamp {

/// Significance level used by every goodness-of-fit gate.
inline constexpr double kSignificance = 1e-3;

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Upper tail P(X >= x) of the chi-square distribution with `dof` degrees.
double chi_square_sf(double x, int dof);

/// Pearson goodness of fit. Cells with expected probability 0 are left out of
/// the statistic and the degrees of freedom; a nonzero count in such a cell
/// gives an infinite statistic and p = 0.
ChiSquare chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> expected_prob);

struct FrequencyReport {
    std::vector<Permutation> cells;      ///< canonical (lexicographic) order
    std::vector<std::uint64_t> observed;
    std::vector<double> expected;        ///< probability per cell
    std::uint64_t trials = 0;
    std::uint64_t outside = 0;           ///< samples matching no cell
    std::uint64_t invalid = 0;           ///< samples that are not extensions of the target
    ChiSquare chi;

    double frequency(std::size_t cell) const {
        return trials ? static_cast<double>(observed[cell]) / static_cast<double>(trials) : 0.0;
    }
    bool passes(double alpha = kSignificance) const {
        return outside == 0 && invalid == 0 && chi.p_value >= alpha;
    }
};

/// Returns a sample in original labels for replicate index i.
using Sampler = std::function<Permutation(std::uint64_t replicate)>;

/// Bins `trials` samples into `cells` and tests them against the uniform law
/// on the cells that are extensions of `target` (other cells expect 0).
FrequencyReport uniformity_test(const Relation& target, const ExtensionSet& cells,
                                const Sampler& sampler, std::uint64_t trials,
                                unsigned threads = 1);

/// CFTP sampler; replicate i runs with master seed mix_seed(seed, i). Cells
/// come from `reference` when given (same n), else from the poset itself.
FrequencyReport uniformity_test(const Poset& poset, Driver driver, std::uint64_t t,
                                std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                const Relation* reference = nullptr);

/// Starts from an oracle-uniform extension, applies one underlying sweep with
/// fresh coins, and tests the result for uniformity.
FrequencyReport stationarity_test(const Relation& rel, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 1);

/// Sweeps until the Star that starts in slot 1 reaches slot n and is promoted.
struct TauSample {
    int n = 0;
    std::vector<std::uint64_t> tau;

    double mean() const;
    double std_error() const;
    /// Fraction of replicates with tau >= threshold.
    double tail_fraction(double threshold) const;
};

/// (n^2 - n + 2) / 2
double tau_mean_bound(int n) noexcept;
/// (n^2 - n + 3) / 2
double tau_tail_threshold(int n) noexcept;

/// Runs the bounding chain from the initial state and follows the Star that
/// starts in slot 1. Adjacent Stars are interchangeable, so when a coin fires
/// across two Stars the tracked identity moves even though r does not change.
TauSample measure_tau(int n, std::uint64_t replicates, std::uint64_t seed, unsigned threads = 1);

/// Per-sweep displacement of a tracked Star. Index 0 holds displacement -1,
/// index j holds j - 1, and the last bin pools everything >= kDisplacementTail.
inline constexpr int kDisplacementTail = 4;
struct DisplacementHistogram {
    std::vector<std::uint64_t> interior;  ///< Star started the sweep in slot > 1
    std::vector<std::uint64_t> boundary;  ///< Star started the sweep in slot 1
};

/// Only sweeps starting at least kDisplacementTail slots from the end are
/// recorded, so absorption at slot n cannot distort any bin.
DisplacementHistogram star_displacements(int n, std::uint64_t replicates, std::uint64_t seed);

/// Exact probabilities for the displacement bins.
std::vector<double> interior_displacement_law();
std::vector<double> boundary_displacement_law();

struct SuccessPoint {
    std::uint64_t t = 0;
    std::uint64_t replicates = 0;
    std::uint64_t successes = 0;

    double fraction() const {
        return replicates ? static_cast<double>(successes) / static_cast<double>(replicates) : 0.0;
    }
};

/// Fraction of bounding-only runs that coalesce within t sweeps, per grid value.
std::vector<SuccessPoint> success_curve(int n, std::span<const std::uint64_t> t_grid,
                                        std::uint64_t replicates, std::uint64_t seed,
                                        unsigned threads = 1);

struct Summary {
    double mean = 0.0;
    std::uint64_t max = 0;
};

struct CostReport {
    int n = 0;
    Driver driver = Driver::fixed;
    std::uint64_t t = 0;
    std::vector<RunStats> runs;

    Summary bits;
    Summary swap_ops;
    Summary substep_calls;
    Summary sweeps;
    Summary depth;

    double bits_bound = 0.0;  ///< 1.83 n^3 ln n
    double ops_bound = 0.0;   ///< 2.75 n^3 ln n
};

/// Runs `runs` independent samples (run i uses seed mix_seed(seed, i)).
CostReport cost_report(const Poset& poset, Driver driver, std::uint64_t t, std::uint64_t runs,
                       std::uint64_t seed, unsigned threads = 1);

struct BoundingCheck {
    std::uint64_t substeps = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t invariant_violations = 0;
    std::uint64_t restarts = 0;
};

/// Coupled sweeps from (oracle-uniform extension, initial bounding state),
/// checking bounds and the bounding invariants after every substep. The pair
/// restarts whenever the bounding state coalesces.
BoundingCheck check_coupled_bounds(const Relation& internal, std::uint64_t sweeps,
                                   std::uint64_t seed);

} // namespace lexsamp

#include "lexsamp/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lexsamp {

using nlohmann::json;

std::string format_permutation(std::span<const Item> sigma, char sep) {
    std::string out;
    for (std::size_t p = 0; p < sigma.size(); ++p) {
        if (p) out += sep;
        out += std::to_string(sigma[p]);
    }
    return out;
}

json to_json(const RunStats& stats) {
    return {{"sweeps_executed", stats.sweeps_executed},
            {"bits_consumed", stats.bits_consumed},
            {"swap_ops", stats.swap_ops},
            {"substep_calls", stats.substep_calls},
            {"recursion_depth", stats.recursion_depth},
            {"success", stats.success}};
}

namespace {

// JSON has no infinity; an impossible observation is reported as null.
json finite_or_null(double x) {
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json to_json(const Summary& s) {
    return {{"mean", s.mean}, {"max", s.max}};
}

} // namespace

json to_json(const FrequencyReport& report) {
    json cells = json::array();
    for (std::size_t c = 0; c < report.cells.size(); ++c) {
        cells.push_back({{"index", c + 1},
                         {"extension", report.cells[c]},
                         {"observed", report.observed[c]},
                         {"frequency", report.frequency(c)},
                         {"expected", report.expected[c]}});
    }
    return {{"trials", report.trials},
            {"cells", std::move(cells)},
            {"outside", report.outside},
            {"invalid", report.invalid},
            {"chi_square", finite_or_null(report.chi.statistic)},
            {"dof", report.chi.dof},
            {"p_value", report.chi.p_value},
            {"passes", report.passes()}};
}

json to_json(const TauSample& sample) {
    const double threshold = tau_tail_threshold(sample.n);
    return {{"n", sample.n},
            {"replicates", sample.tau.size()},
            {"mean", sample.mean()},
            {"std_error", sample.std_error()},
            {"mean_bound", tau_mean_bound(sample.n)},
            {"tail_threshold", threshold},
            {"tail_fraction", sample.tail_fraction(threshold)}};
}

json to_json(const std::vector<SuccessPoint>& curve) {
    json rows = json::array();
    for (const auto& point : curve) {
        rows.push_back({{"t", point.t},
                        {"replicates", point.replicates},
                        {"successes", point.successes},
                        {"fraction", point.fraction()}});
    }
    return rows;
}

json to_json(const CostReport& report) {
    json runs = json::array();
    for (const auto& run : report.runs) runs.push_back(to_json(run));
    return {{"n", report.n},
            {"driver", std::string(to_string(report.driver))},
            {"t", report.t},
            {"runs", report.runs.size()},
            {"bits", to_json(report.bits)},
            {"swap_ops", to_json(report.swap_ops)},
            {"substep_calls", to_json(report.substep_calls)},
            {"sweeps", to_json(report.sweeps)},
            {"recursion_depth", to_json(report.depth)},
            {"bits_bound", report.bits_bound},
            {"ops_bound", report.ops_bound},
            {"per_run", std::move(runs)}};
}

void write_text(std::ostream& out, const FrequencyReport& report) {
    std::size_t width = 9;
    for (const auto& cell : report.cells) width = std::max(width, format_permutation(cell).size());
    out << std::left << std::setw(6) << "cell" << std::setw(static_cast<int>(width) + 2)
        << "extension" << std::right << std::setw(10) << "observed" << std::setw(12)
        << "frequency" << std::setw(12) << "expected" << '\n';
    out << std::fixed << std::setprecision(4);
    for (std::size_t c = 0; c < report.cells.size(); ++c) {
        out << std::left << std::setw(6) << (c + 1) << std::setw(static_cast<int>(width) + 2)
            << format_permutation(report.cells[c]) << std::right << std::setw(10)
            << report.observed[c] << std::setw(12) << report.frequency(c) << std::setw(12)
            << report.expected[c] << '\n';
    }
    out << "trials " << report.trials << "  outside " << report.outside << "  invalid "
        << report.invalid << '\n';
    out << "chi_square " << report.chi.statistic << "  dof " << report.chi.dof << "  p_value "
        << std::setprecision(6) << report.chi.p_value << '\n';
    out << std::defaultfloat;
}

void write_text(std::ostream& out, const TauSample& sample) {
    const double threshold = tau_tail_threshold(sample.n);
    out << std::fixed << std::setprecision(4);
    out << "n               " << sample.n << '\n'
        << "replicates      " << sample.tau.size() << '\n'
        << "mean_tau        " << sample.mean() << '\n'
        << "std_error       " << sample.std_error() << '\n'
        << "mean_bound      " << tau_mean_bound(sample.n) << '\n'
        << "tail_threshold  " << threshold << '\n'
        << "tail_fraction   " << sample.tail_fraction(threshold) << '\n';
    out << std::defaultfloat;
}

void write_text(std::ostream& out, const CostReport& report) {
    out << "n " << report.n << "  driver " << to_string(report.driver) << "  t " << report.t
        << "  runs " << report.runs.size() << '\n';
    out << std::left << std::setw(16) << "counter" << std::right << std::setw(14) << "mean"
        << std::setw(12) << "max" << '\n';
    out << std::fixed << std::setprecision(2);
    const auto row = [&](const char* name, const Summary& s) {
        out << std::left << std::setw(16) << name << std::right << std::setw(14) << s.mean
            << std::setw(12) << s.max << '\n';
    };
    row("bits", report.bits);
    row("substep_calls", report.substep_calls);
    row("swap_ops", report.swap_ops);
    row("sweeps", report.sweeps);
    row("recursion_depth", report.depth);
    out << "bound_bits      " << report.bits_bound << "  (1.83 n^3 ln n)\n";
    out << "bound_ops       " << report.ops_bound << "  (2.75 n^3 ln n)\n";
    out << std::defaultfloat;
}

void write_csv(std::ostream& out, const FrequencyReport& report) {
    out << "cell,extension,observed,frequency,expected\n";
    for (std::size_t c = 0; c < report.cells.size(); ++c) {
        out << (c + 1) << ',' << format_permutation(report.cells[c]) << ',' << report.observed[c]
            << ',' << report.frequency(c) << ',' << report.expected[c] << '\n';
    }
}

void write_csv(std::ostream& out, const TauSample& sample) {
    out << "replicate,tau\n";
    for (std::size_t i = 0; i < sample.tau.size(); ++i) {
        out << i << ',' << sample.tau[i] << '\n';
    }
}

void write_csv(std::ostream& out, const CostReport& report) {
    out << "run,sweeps_executed,bits_consumed,swap_ops,substep_calls,recursion_depth\n";
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const auto& r = report.runs[i];
        out << i << ',' << r.sweeps_executed << ',' << r.bits_consumed << ',' << r.swap_ops << ','
            << r.substep_calls << ',' << r.recursion_depth << '\n';
    }
}

} // namespace lexsamp

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lexsamp/cftp.hpp"
#include "lexsamp/chains.hpp"
#include "lexsamp/oracle.hpp"
#include "lexsamp/poset.hpp"
#include "lexsamp/stats.hpp"

namespace py = pybind11;
using namespace lexsamp;

namespace {

Driver driver_from(const std::string& name) {
    if (auto d = parse_driver(name)) return *d;
    throw py::value_error("driver must be 'doubling' or 'fixed'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exactly uniform random linear extensions by coupling from the past";

    py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IndexError>(m, "ItemIndexError", PyExc_IndexError);

    py::class_<Relation>(m, "Relation")
        .def(py::init([](const std::vector<OrderPair>& pairs, int n) {
                 return close_and_validate(pairs, n);
             }),
             py::arg("pairs"), py::arg("n"))
        .def_static("from_file", [](const std::string& path) { return read_relation_file(path); })
        .def_static("parse",
                    [](const std::string& text) {
                        std::istringstream in(text);
                        return parse_relation(in);
                    })
        .def_property_readonly("n", &Relation::size)
        .def("precedes", &Relation::precedes)
        .def("pairs", &Relation::pairs)
        .def("__repr__", [](const Relation& r) {
            return "<Relation n=" + std::to_string(r.size()) + " pairs=" +
                   std::to_string(r.pairs().size()) + ">";
        });

    py::class_<Poset>(m, "Poset")
        .def(py::init(&normalize), py::arg("relation"))
        .def_property_readonly("n", &Poset::size)
        .def_property_readonly("internal", &Poset::internal)
        .def_property_readonly("original", &Poset::original)
        .def("to_internal", &Poset::to_internal)
        .def("to_original", &Poset::to_original)
        .def("identity_labels", &Poset::identity_labels);

    m.def("close_and_validate", &close_and_validate, py::arg("pairs"), py::arg("n"));
    m.def("normalize", &normalize, py::arg("relation"));
    m.def("is_linear_extension",
          [](const Relation& rel, const Permutation& sigma) {
              return is_linear_extension(rel, sigma);
          },
          py::arg("relation"), py::arg("sigma"));
    m.attr("STAR") = kStar;
    m.def("extended_precedes", &extended_precedes, py::arg("a"), py::arg("b"),
          py::arg("relation"));

    py::class_<BoundingState>(m, "BoundingState")
        .def(py::init([](std::vector<Item> r, int k) { return BoundingState{std::move(r), k}; }),
             py::arg("r"), py::arg("k"))
        .def_readwrite("r", &BoundingState::r)
        .def_readwrite("k", &BoundingState::k)
        .def("is_permutation", &BoundingState::is_permutation)
        .def("__eq__", [](const BoundingState& a, const BoundingState& b) { return a == b; })
        .def("__repr__", [](const BoundingState& y) {
            std::string s = "BoundingState(r=[";
            for (std::size_t p = 0; p < y.r.size(); ++p) {
                if (p) s += ", ";
                s += y.r[p] == kStar ? "*" : std::to_string(y.r[p]);
            }
            return s + "], k=" + std::to_string(y.k) + ")";
        });

    // Step functions take 0-based positions and return new states.
    m.def("adj_step",
          [](Permutation sigma, int pos, bool coin, const Relation& rel) {
              adj_step(sigma, pos, coin, rel);
              return sigma;
          },
          py::arg("sigma"), py::arg("pos"), py::arg("coin"), py::arg("relation"));
    m.def("bc_step",
          [](BoundingState y, int pos, bool coin, const Relation& rel) {
              bc_step(y, pos, coin, rel);
              return y;
          },
          py::arg("y"), py::arg("pos"), py::arg("coin"), py::arg("relation"));
    m.def("sim_step",
          [](Permutation sigma, BoundingState y, int pos, bool coin, const Relation& rel) {
              sim_step(sigma, y, pos, coin, rel);
              return py::make_tuple(sigma, y);
          },
          py::arg("sigma"), py::arg("y"), py::arg("pos"), py::arg("coin"), py::arg("relation"));
    m.def("bounds", [](const BoundingState& y, const Permutation& sigma) { return bounds(y, sigma); },
          py::arg("y"), py::arg("sigma"));
    m.def("initial_bounding_state", &initial_bounding_state, py::arg("n"));
    m.def("recommended_t", &recommended_t, py::arg("n"));

    py::class_<RunStats>(m, "RunStats")
        .def_readonly("sweeps_executed", &RunStats::sweeps_executed)
        .def_readonly("bits_consumed", &RunStats::bits_consumed)
        .def_readonly("swap_ops", &RunStats::swap_ops)
        .def_readonly("substep_calls", &RunStats::substep_calls)
        .def_readonly("recursion_depth", &RunStats::recursion_depth)
        .def_readonly("success", &RunStats::success)
        .def("__eq__", [](const RunStats& a, const RunStats& b) { return a == b; });

    py::class_<SampleResult>(m, "SampleResult")
        .def_readonly("internal", &SampleResult::internal)
        .def_readonly("original", &SampleResult::original)
        .def_readonly("stats", &SampleResult::stats);

    m.def("cftp_fixed",
          [](const Poset& p, std::uint64_t t, std::uint64_t seed) { return cftp_fixed(p, t, seed); },
          py::arg("poset"), py::arg("t"), py::arg("seed"));
    m.def("cftp_doubling",
          [](const Poset& p, std::uint64_t t0, std::uint64_t seed) {
              return cftp_doubling(p, t0, seed);
          },
          py::arg("poset"), py::arg("t0"), py::arg("seed"));
    m.def("sample",
          [](const Poset& p, std::uint64_t seed, const std::string& driver,
             std::optional<std::uint64_t> t) {
              const Driver d = driver_from(driver);
              const std::uint64_t window =
                  t ? *t : (d == Driver::doubling ? default_t0(p.size()) : recommended_t(p.size()));
              return sample(p, d, window, seed).original;
          },
          py::arg("poset"), py::arg("seed"), py::arg("driver") = "doubling",
          py::arg("t") = py::none());

    m.def("enumerate_extensions",
          [](const Relation& rel, int cap) { return enumerate_extensions(rel, cap).extensions; },
          py::arg("relation"), py::arg("cap") = kEnumerationCap);
    m.def("count_extensions", &count_extensions, py::arg("relation"),
          py::arg("cap") = kCountingCap);

    py::class_<ChiSquare>(m, "ChiSquare")
        .def_readonly("statistic", &ChiSquare::statistic)
        .def_readonly("dof", &ChiSquare::dof)
        .def_readonly("p_value", &ChiSquare::p_value);
    m.def("chi_square_sf", &chi_square_sf, py::arg("x"), py::arg("dof"));

    py::class_<FrequencyReport>(m, "FrequencyReport")
        .def_readonly("cells", &FrequencyReport::cells)
        .def_readonly("observed", &FrequencyReport::observed)
        .def_readonly("expected", &FrequencyReport::expected)
        .def_readonly("trials", &FrequencyReport::trials)
        .def_readonly("outside", &FrequencyReport::outside)
        .def_readonly("invalid", &FrequencyReport::invalid)
        .def_readonly("chi", &FrequencyReport::chi)
        .def("frequency", &FrequencyReport::frequency)
        .def("passes", &FrequencyReport::passes, py::arg("alpha") = kSignificance);
    m.def("uniformity_test",
          [](const Poset& p, std::uint64_t trials, std::uint64_t seed, const std::string& driver,
             std::optional<std::uint64_t> t, const Relation* reference, unsigned threads) {
              const Driver d = driver_from(driver);
              const std::uint64_t window =
                  t ? *t : (d == Driver::doubling ? default_t0(p.size()) : recommended_t(p.size()));
              py::gil_scoped_release release;
              return uniformity_test(p, d, window, trials, seed, threads, reference);
          },
          py::arg("poset"), py::arg("trials"), py::arg("seed"), py::arg("driver") = "doubling",
          py::arg("t") = py::none(), py::arg("reference") = nullptr, py::arg("threads") = 0);

    py::class_<TauSample>(m, "TauSample")
        .def_readonly("n", &TauSample::n)
        .def_readonly("tau", &TauSample::tau)
        .def("mean", &TauSample::mean)
        .def("std_error", &TauSample::std_error)
        .def("tail_fraction", &TauSample::tail_fraction);
    m.def("measure_tau", &measure_tau, py::arg("n"), py::arg("replicates"), py::arg("seed"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("tau_mean_bound", &tau_mean_bound);
    m.def("tau_tail_threshold", &tau_tail_threshold);

    py::class_<SuccessPoint>(m, "SuccessPoint")
        .def_readonly("t", &SuccessPoint::t)
        .def_readonly("replicates", &SuccessPoint::replicates)
        .def_readonly("successes", &SuccessPoint::successes)
        .def("fraction", &SuccessPoint::fraction);
    m.def("success_curve",
          [](int n, const std::vector<std::uint64_t>& grid, std::uint64_t replicates,
             std::uint64_t seed, unsigned threads) {
              return success_curve(n, grid, replicates, seed, threads);
          },
          py::arg("n"), py::arg("t_grid"), py::arg("replicates"), py::arg("seed"),
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

    py::class_<Summary>(m, "Summary")
        .def_readonly("mean", &Summary::mean)
        .def_readonly("max", &Summary::max);
    py::class_<CostReport>(m, "CostReport")
        .def_readonly("n", &CostReport::n)
        .def_readonly("t", &CostReport::t)
        .def_readonly("runs", &CostReport::runs)
        .def_readonly("bits", &CostReport::bits)
        .def_readonly("swap_ops", &CostReport::swap_ops)
        .def_readonly("substep_calls", &CostReport::substep_calls)
        .def_readonly("sweeps", &CostReport::sweeps)
        .def_readonly("depth", &CostReport::depth)
        .def_readonly("bits_bound", &CostReport::bits_bound)
        .def_readonly("ops_bound", &CostReport::ops_bound);
    m.def("cost_report",
          [](const Poset& p, const std::string& driver, std::uint64_t t, std::uint64_t runs,
             std::uint64_t seed, unsigned threads) {
              const Driver d = driver_from(driver);
              py::gil_scoped_release release;
              return cost_report(p, d, t, runs, seed, threads);
          },
          py::arg("poset"), py::arg("driver"), py::arg("t"), py::arg("runs"), py::arg("seed"),
          py::arg("threads") = 0);
}

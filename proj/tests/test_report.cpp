#include "doctest.h"

#include <limits>
#include <sstream>

#include "lexsamp/report.hpp"
#include "test_support.hpp"

using namespace lexsamp;
using namespace lexsamp::testing;

TEST_CASE("format_permutation") {
    CHECK(format_permutation(Permutation{2, 1, 4, 3, 5}) == "2 1 4 3 5");
    CHECK(format_permutation(Permutation{3, 1}, ',') == "3,1");
    CHECK(format_permutation(Permutation{}).empty());
}

TEST_CASE("run counters serialize by name") {
    RunStats stats;
    stats.sweeps_executed = 12;
    stats.bits_consumed = 40;
    stats.swap_ops = 7;
    stats.substep_calls = 48;
    stats.recursion_depth = 2;
    stats.success = true;
    const auto j = to_json(stats);
    CHECK(j["sweeps_executed"] == 12);
    CHECK(j["bits_consumed"] == 40);
    CHECK(j["swap_ops"] == 7);
    CHECK(j["substep_calls"] == 48);
    CHECK(j["recursion_depth"] == 2);
    CHECK(j["success"] == true);
}

TEST_CASE("frequency report in three formats") {
    FrequencyReport report;
    report.cells = {{1, 2}, {2, 1}};
    report.observed = {3, 0};
    report.expected = {0.5, 0.0};
    report.trials = 3;
    report.chi = chi_square_test(report.observed, report.expected);

    const auto j = to_json(report);
    CHECK(j["trials"] == 3);
    CHECK(j["cells"].size() == 2);
    CHECK(j["cells"][0]["extension"] == std::vector<int>{1, 2});
    CHECK(j["cells"][0]["frequency"] == 1.0);
    CHECK(j["cells"][1]["index"] == 2);
    CHECK(j["passes"] == true);

    std::ostringstream text;
    write_text(text, report);
    CHECK(text.str().find("1 2") != std::string::npos);
    CHECK(text.str().find("trials 3") != std::string::npos);

    std::ostringstream csv;
    write_csv(csv, report);
    CHECK(csv.str() == "cell,extension,observed,frequency,expected\n1,1 2,3,1,0.5\n2,2 1,0,0,0\n");
}

TEST_CASE("infinite statistic becomes null") {
    FrequencyReport report;
    report.cells = {{1, 2}, {2, 1}};
    report.observed = {3, 1};
    report.expected = {1.0, 0.0};
    report.trials = 4;
    report.chi = chi_square_test(report.observed, report.expected);
    const auto j = to_json(report);
    CHECK(j["chi_square"].is_null());
    CHECK(j["p_value"] == 0.0);
    CHECK(j["passes"] == false);
}

TEST_CASE("tau and cost reports") {
    TauSample s;
    s.n = 3;
    s.tau = {2, 4, 6};
    const auto j = to_json(s);
    CHECK(j["mean"] == 4.0);
    CHECK(j["mean_bound"] == 4.0);
    CHECK(j["tail_threshold"] == 4.5);
    CHECK(j["tail_fraction"].get<double>() == doctest::Approx(1.0 / 3));
    std::ostringstream csv;
    write_csv(csv, s);
    CHECK(csv.str() == "replicate,tau\n0,2\n1,4\n2,6\n");

    const CostReport cost = cost_report(normalize(five_item()), Driver::fixed, 35, 5, 1, 1);
    const auto c = to_json(cost);
    CHECK(c["driver"] == "fixed");
    CHECK(c["t"] == 35);
    CHECK(c["per_run"].size() == 5);
    std::ostringstream rows;
    write_csv(rows, cost);
    const std::string csv_rows = rows.str();
    CHECK(std::count(csv_rows.begin(), csv_rows.end(), '\n') == 6);
    std::ostringstream text;
    write_text(text, cost);
    CHECK(text.str().find("bound_bits") != std::string::npos);
}

TEST_CASE("success curve rows") {
    const std::vector<SuccessPoint> curve{{4, 10, 3}, {8, 10, 10}};
    const auto j = to_json(curve);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["fraction"] == 0.3);
    CHECK(j[1]["successes"] == 10);
}

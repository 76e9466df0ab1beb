#include "lexsamp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"

#include "lexsamp/coin_tape.hpp"
#include "lexsamp/oracle.hpp"
#include "lexsamp/poset.hpp"
#include "lexsamp/report.hpp"
#include "lexsamp/stats.hpp"

namespace lexsamp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

const char* command_name(Command c) {
    switch (c) {
    case Command::sample: return "sample";
    case Command::count: return "count";
    case Command::test: return "test";
    case Command::bench: return "bench";
    case Command::tau: return "tau";
    }
    return "?";
}

std::uint64_t resolve_seed(const RunConfig& config) {
    if (config.seed) return *config.seed;
    if (const char* env = std::getenv("LEXSAMP_SEED"); env && *env) {
        std::size_t used = 0;
        const std::string text(env);
        std::uint64_t value = 0;
        try {
            value = std::stoull(text, &used, 0);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size()) {
            throw std::invalid_argument("LEXSAMP_SEED is not an unsigned integer: " + text);
        }
        return value;
    }
    std::random_device entropy;
    return (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
}

std::uint64_t window_for(const RunConfig& config, int n) {
    if (config.t0) return *config.t0;
    return config.driver == Driver::doubling ? default_t0(n) : recommended_t(n);
}

std::uint64_t samples_or(const RunConfig& config, std::uint64_t fallback) {
    return config.samples ? config.samples : fallback;
}

json config_json(const RunConfig& config, std::uint64_t seed) {
    json j = {{"command", command_name(config.command)},
              {"seed", seed},
              {"generator", std::string(CoinTape::kGenerator)}};
    if (!config.input.empty()) j["input"] = config.input;
    return j;
}

void emit_json(std::ostream& out, json body, Clock::time_point started) {
    const auto elapsed =
        std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    body["timing"] = {{"elapsed_ms", elapsed}};
    out << body.dump(2) << '\n';
}

std::string header_line(const RunConfig& config, std::uint64_t seed) {
    return std::string("# lexsamp ") + command_name(config.command) + " seed=" +
           std::to_string(seed) + " generator=" + std::string(CoinTape::kGenerator);
}

int do_sample(const RunConfig& config, std::uint64_t seed, std::ostream& out) {
    const auto started = Clock::now();
    const Poset poset = normalize(read_relation_file(config.input));
    const std::uint64_t t = window_for(config, poset.size());
    const std::uint64_t count = samples_or(config, 1);

    std::vector<SampleResult> results;
    results.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        results.push_back(sample(poset, config.driver, t, mix_seed(seed, i)));
    }

    if (config.format == Format::json) {
        json body = config_json(config, seed);
        body["driver"] = std::string(to_string(config.driver));
        body["t0"] = t;
        json extensions = json::array();
        json stats = json::array();
        for (const auto& r : results) {
            extensions.push_back(r.original);
            stats.push_back(to_json(r.stats));
        }
        body["extensions"] = std::move(extensions);
        body["stats"] = std::move(stats);
        emit_json(out, std::move(body), started);
    } else if (config.format == Format::csv) {
        out << "sample,extension,sweeps_executed,bits_consumed,swap_ops,substep_calls,"
               "recursion_depth\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& s = results[i].stats;
            out << i << ',' << format_permutation(results[i].original) << ','
                << s.sweeps_executed << ',' << s.bits_consumed << ',' << s.swap_ops << ','
                << s.substep_calls << ',' << s.recursion_depth << '\n';
        }
    } else {
        out << header_line(config, seed) << " driver=" << to_string(config.driver)
            << " t0=" << t << '\n';
        RunStats total;
        for (const auto& r : results) {
            out << format_permutation(r.original) << '\n';
            total.sweeps_executed += r.stats.sweeps_executed;
            total.bits_consumed += r.stats.bits_consumed;
            total.swap_ops += r.stats.swap_ops;
            total.substep_calls += r.stats.substep_calls;
            total.recursion_depth = std::max(total.recursion_depth, r.stats.recursion_depth);
        }
        out << "# sweeps_executed=" << total.sweeps_executed
            << " bits_consumed=" << total.bits_consumed << " swap_ops=" << total.swap_ops
            << " substep_calls=" << total.substep_calls
            << " max_recursion_depth=" << total.recursion_depth << '\n';
    }
    return kExitOk;
}

int do_count(const RunConfig& config, std::ostream& out) {
    const auto started = Clock::now();
    const Relation rel = read_relation_file(config.input);
    const std::uint64_t count = count_extensions(rel);
    if (config.format == Format::json) {
        json body = {{"command", "count"}, {"input", config.input}, {"n", rel.size()},
                     {"count", count}};
        emit_json(out, std::move(body), started);
    } else if (config.format == Format::csv) {
        out << "n,count\n" << rel.size() << ',' << count << '\n';
    } else {
        out << count << '\n';
    }
    return kExitOk;
}

int do_test(const RunConfig& config, std::uint64_t seed, std::ostream& out) {
    const auto started = Clock::now();
    const Poset poset = normalize(read_relation_file(config.input));
    std::optional<Relation> reference;
    if (!config.reference.empty()) reference = read_relation_file(config.reference);
    const std::uint64_t t = window_for(config, poset.size());
    const FrequencyReport report =
        uniformity_test(poset, config.driver, t, samples_or(config, 10000), seed, config.threads,
                        reference ? &*reference : nullptr);
    if (config.format == Format::json) {
        json body = config_json(config, seed);
        body["driver"] = std::string(to_string(config.driver));
        body["t0"] = t;
        if (reference) body["reference"] = config.reference;
        body["report"] = to_json(report);
        emit_json(out, std::move(body), started);
    } else if (config.format == Format::csv) {
        write_csv(out, report);
    } else {
        out << header_line(config, seed) << " driver=" << to_string(config.driver)
            << " t0=" << t << '\n';
        write_text(out, report);
    }
    return kExitOk;
}

int do_bench(const RunConfig& config, std::uint64_t seed, std::ostream& out) {
    const auto started = Clock::now();
    const Poset poset = normalize(read_relation_file(config.input));
    const std::uint64_t t = window_for(config, poset.size());
    const CostReport report =
        cost_report(poset, config.driver, t, samples_or(config, 200), seed, config.threads);
    if (config.format == Format::json) {
        json body = config_json(config, seed);
        body["report"] = to_json(report);
        emit_json(out, std::move(body), started);
    } else if (config.format == Format::csv) {
        write_csv(out, report);
    } else {
        out << header_line(config, seed) << '\n';
        write_text(out, report);
    }
    return kExitOk;
}

int do_tau(const RunConfig& config, std::uint64_t seed, std::ostream& out) {
    const auto started = Clock::now();
    int n = config.n;
    if (!config.input.empty()) n = read_relation_file(config.input).size();
    if (n < 2) {
        throw std::invalid_argument("tau needs n >= 2 (use --n or an input file)");
    }
    const TauSample sample = measure_tau(n, samples_or(config, 10000), seed, config.threads);
    if (config.format == Format::json) {
        json body = config_json(config, seed);
        body["report"] = to_json(sample);
        emit_json(out, std::move(body), started);
    } else if (config.format == Format::csv) {
        write_csv(out, sample);
    } else {
        out << header_line(config, seed) << '\n';
        write_text(out, sample);
    }
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command != Command::tau && config.input.empty()) {
            throw std::invalid_argument("missing poset file");
        }
        if (config.t0 && *config.t0 < 1) {
            throw std::invalid_argument("--t0 must be at least 1");
        }
        const std::uint64_t seed = resolve_seed(config);
        switch (config.command) {
        case Command::sample: return do_sample(config, seed, out);
        case Command::count: return do_count(config, out);
        case Command::test: return do_test(config, seed, out);
        case Command::bench: return do_bench(config, seed, out);
        case Command::tau: return do_tau(config, seed, out);
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const CycleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exactly uniform random linear extensions by coupling from the past"};
    app.require_subcommand(1);

    RunConfig config;
    std::uint64_t seed = 0;
    std::uint64_t t0 = 0;
    std::string driver = "doubling";
    std::string format = "text";

    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* input = sub->add_option("poset", config.input, "Poset file (`n <count>` then `i j` pairs)");
        if (needs_input) input->required();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    const auto add_random = [&](CLI::App* sub, std::uint64_t default_samples) {
        sub->add_option("--seed", seed, "Master seed (default: LEXSAMP_SEED, then OS entropy)");
        sub->add_option("--samples", config.samples,
                        "Number of samples/replicates (default " + std::to_string(default_samples) + ")")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "Worker threads, 0 = all cores");
    };
    const auto add_driver = [&](CLI::App* sub) {
        sub->add_option("--t0", t0, "Initial window in sweeps (doubling) or fixed window (fixed)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--driver", driver, "CFTP driver")
            ->check(CLI::IsMember({"doubling", "fixed"}));
    };

    auto* sample_cmd = app.add_subcommand("sample", "Draw uniform linear extensions");
    add_common(sample_cmd, true);
    add_random(sample_cmd, 1);
    add_driver(sample_cmd);

    auto* count_cmd = app.add_subcommand("count", "Count linear extensions exactly (n <= 20)");
    add_common(count_cmd, true);

    auto* test_cmd = app.add_subcommand("test", "Chi-square uniformity test against the exact oracle");
    add_common(test_cmd, true);
    add_random(test_cmd, 10000);
    add_driver(test_cmd);
    test_cmd->add_option("--reference", config.reference,
                         "Bin against the extensions of this poset instead (same n)");

    auto* bench_cmd = app.add_subcommand("bench", "Cost counters over independent runs");
    add_common(bench_cmd, true);
    add_random(bench_cmd, 200);
    add_driver(bench_cmd);

    auto* tau_cmd = app.add_subcommand("tau", "Sweeps for the slot-1 Star to be promoted");
    add_common(tau_cmd, false);
    add_random(tau_cmd, 10000);
    tau_cmd->add_option("--n", config.n, "Item count when no poset file is given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const std::pair<CLI::App*, Command> commands[] = {{sample_cmd, Command::sample},
                                                      {count_cmd, Command::count},
                                                      {test_cmd, Command::test},
                                                      {bench_cmd, Command::bench},
                                                      {tau_cmd, Command::tau}};
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) {
            config.command = command;
            const auto given = [sub](const char* name) {
                const CLI::Option* opt = sub->get_option_no_throw(name);
                return opt != nullptr && opt->count() > 0;
            };
            if (given("--seed")) config.seed = seed;
            if (given("--t0")) config.t0 = t0;
        }
    }
    config.driver = *parse_driver(driver);
    config.format = formats.at(format);
    return run(config, out, err);
}

} // namespace lexsamp::cli

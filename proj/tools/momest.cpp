#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "momest/collision.hpp"
#include "momest/distributions.hpp"
#include "momest/ingest.hpp"
#include "momest/planner.hpp"
#include "momest/regime.hpp"
#include "momest/report.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInsufficientData = 2;

using momest::Token;

std::vector<Token> load_tokens(const std::string& path, bool binary) {
    if (path.empty() || path == "-") {
        return binary ? momest::read_binary_tokens(std::cin)
                      : momest::read_text_tokens(std::cin);
    }
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw CLI::ValidationError("--input", "cannot open '" + path + "'");
    return binary ? momest::read_binary_tokens(in) : momest::read_text_tokens(in);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MOMEST_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void print_report(const momest::RunReport& report, const std::string& format) {
    if (format == "compact")
        std::cout << report.to_json().dump() << "\n";
    else
        std::cout << report.to_string() << "\n";
}

std::uint64_t peak_distinct(std::span<const Token> samples,
                            momest::ResolvedBatching rb) {
    std::uint64_t peak = 0;
    std::unordered_set<Token> seen;
    for (std::uint64_t b = 0; b < rb.n_batches; ++b) {
        seen.clear();
        const auto batch = samples.subspan(b * rb.batch_size, rb.batch_size);
        seen.insert(batch.begin(), batch.end());
        peak = std::max<std::uint64_t>(peak, seen.size());
    }
    return peak;
}

struct CommonFlags {
    int d = 2;
    double eps = 0.5;
    double delta = 0.1;
    std::string input;
    bool binary = false;
    std::string format = "pretty";
    bool timing = false;
    std::uint64_t seed = default_seed();
};

void emit_insufficient(const momest::InsufficientDataError& e) {
    nlohmann::json j{{"error", "insufficient-data"},
                     {"required_samples", e.required_samples},
                     {"available_samples", e.available_samples}};
    std::cout << j.dump(2) << "\n";
}

int run_estimate(const CommonFlags& flags, std::optional<std::uint64_t> batch_size,
                 std::optional<double> entropy_bound) {
    momest::EstimatorConfig config{flags.d, flags.eps, flags.delta, batch_size, flags.seed};
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const auto tokens = load_tokens(flags.input, flags.binary);

    if (entropy_bound && !batch_size) {
        const auto plan = momest::plan_samples(config, *entropy_bound);
        config.batch_size = plan.batch_size;
    }
    try {
        momest::RunReport report;
        report.command = "estimate";
        report.config = config;
        report.result = momest::estimate_moment(tokens, config);
        report.peak_distinct_symbols =
            peak_distinct(tokens, momest::resolve_batching(tokens.size(), config));
        if (flags.timing)
            report.wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        print_report(report, flags.format);
        return 0;
    } catch (const momest::InsufficientDataError& e) {
        emit_insufficient(e);
        return kExitInsufficientData;
    }
}

int run_plan(int d, double eps, double delta, double entropy_bound,
             const std::string& format) {
    momest::EstimatorConfig config{d, eps, delta, std::nullopt, 0};
    momest::RunReport report;
    report.command = "plan";
    report.config = config;
    report.result = momest::plan_samples(config, entropy_bound);
    print_report(report, format);
    return 0;
}

int run_regime(const CommonFlags& flags, std::uint64_t lambda_max) {
    const auto tokens = load_tokens(flags.input, flags.binary);
    momest::RunReport report;
    report.command = "regime";
    report.config = momest::EstimatorConfig{flags.d, 1.0, flags.delta, std::nullopt, flags.seed};
    try {
        report.result = momest::learn_regime(tokens, flags.d, flags.delta, lambda_max);
    } catch (const momest::StreamExhaustedError& e) {
        nlohmann::json j{{"error", "stream-exhausted"},
                         {"last_completed_lambda", e.partial_result.lambda},
                         {"samples_needed", e.samples_needed},
                         {"samples_used", e.partial_result.samples_used}};
        std::cout << j.dump(2) << "\n";
        return kExitInsufficientData;
    }
    print_report(report, flags.format);
    return 0;
}

int run_bench(const std::string& dist_spec, int d, double eps, double delta,
              std::uint64_t runs, std::uint64_t seed, const std::string& estimator,
              std::uint64_t groups) {
    const auto dist = momest::DiscreteDistribution::parse_spec(dist_spec);
    const double p_true = momest::exact_moment(dist, d);
    momest::EstimatorConfig config{d, eps, delta, std::nullopt, seed};
    const auto plan = momest::plan_samples(config, momest::exact_entropy(dist, d));
    config.batch_size = plan.batch_size;

    std::cout << "run,estimator,p_true,p_hat,rel_err,covered\n";
    char line[256];
    for (std::uint64_t run = 0; run < runs; ++run) {
        const auto tokens = momest::sample(dist, plan.n_total, seed + run);
        const auto est = estimator == "median-of-means"
                             ? momest::median_of_means_estimate(tokens, config, groups)
                             : momest::estimate_moment(tokens, config);
        const double rel_err = std::abs(est.p_hat - p_true) / p_true;
        std::snprintf(line, sizeof line, "%llu,%s,%.17g,%.17g,%.17g,%d\n",
                      static_cast<unsigned long long>(run), estimator.c_str(), p_true,
                      est.p_hat, rel_err, rel_err <= eps ? 1 : 0);
        std::cout << line;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collision-based frequency moment and Renyi entropy estimation"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::optional<std::uint64_t> batch_size;
    std::optional<double> entropy_bound;
    std::uint64_t lambda_max = 16;
    std::string dist_spec;
    std::uint64_t runs = 200;
    std::string estimator = "mean";
    std::uint64_t groups = 9;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("-d,--order", flags.d, "moment order (>= 2)");
        cmd->add_option("--format", flags.format, "report format: pretty|compact");
        if (with_input) {
            cmd->add_option("-i,--input", flags.input, "input file ('-' for stdin)");
            cmd->add_flag("--binary", flags.binary, "8-byte little-endian records");
            cmd->add_flag("--timing", flags.timing, "include wall-clock time in the report");
            cmd->add_option("--seed", flags.seed, "RNG seed (default from MOMEST_SEED)");
        }
    };

    auto* est = app.add_subcommand("estimate", "estimate the d-th moment and entropy");
    add_common(est, true);
    est->add_option("--eps", flags.eps, "relative error target (0,1]");
    est->add_option("--delta", flags.delta, "failure probability (0,1)");
    est->add_option("--batch-size", batch_size, "batch size n0 override");
    est->add_option("--entropy-bound", entropy_bound, "entropy upper bound in bits (plans n0)");

    auto* plan = app.add_subcommand("plan", "print the sample plan for given parameters");
    add_common(plan, false);
    plan->add_option("--eps", flags.eps, "relative error target (0,1]");
    plan->add_option("--delta", flags.delta, "failure probability (0,1)");
    double plan_entropy = 0.0;
    plan->add_option("--entropy-bound", plan_entropy, "entropy upper bound in bits")
        ->required();

    auto* regime = app.add_subcommand("regime", "bracket the moment by doubling search");
    add_common(regime, true);
    regime->add_option("--delta", flags.delta, "total failure probability (0,1)");
    regime->add_option("--lambda-max", lambda_max, "threshold cap");

    auto* bench = app.add_subcommand("bench", "seeded Monte Carlo comparison, CSV output");
    add_common(bench, false);
    bench->add_option("--dist", dist_spec, "distribution spec, e.g. zipf:m=1024,s=1.0")
        ->required();
    bench->add_option("--eps", flags.eps, "relative error target (0,1]");
    bench->add_option("--delta", flags.delta, "failure probability (0,1)");
    bench->add_option("--runs", runs, "number of seeded runs");
    bench->add_option("--seed", flags.seed, "base seed");
    bench->add_option("--estimator", estimator, "mean | median-of-means");
    bench->add_option("--groups", groups, "groups for median-of-means");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (est->parsed()) return run_estimate(flags, batch_size, entropy_bound);
        if (plan->parsed())
            return run_plan(flags.d, flags.eps, flags.delta, plan_entropy, flags.format);
        if (regime->parsed()) return run_regime(flags, lambda_max);
        if (bench->parsed())
            return run_bench(dist_spec, flags.d, flags.eps, flags.delta, runs, flags.seed,
                             estimator, groups);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

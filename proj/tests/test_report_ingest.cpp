#include <doctest.h>

#include <sstream>

#include "momest/ingest.hpp"
#include "momest/report.hpp"

using namespace momest;

TEST_CASE("RunReport: JSON round trip is lossless") {
    RunReport report;
    report.command = "estimate";
    report.config = EstimatorConfig{3, 0.25, 0.05, 17, 42};
    MomentEstimate est;
    est.p_hat = 0.062499999999999993;  // exercise shortest-round-trip doubles
    est.renyi_entropy_bits = 4.0000000000000009;
    est.d = 3;
    est.n_used = 136;
    est.n_dropped = 7;
    est.n_batches = 8;
    est.batch_size = 17;
    report.result = est;
    report.peak_distinct_symbols = 99;

    const auto text = report.to_string();
    const auto parsed = RunReport::from_json(nlohmann::json::parse(text));
    CHECK(parsed == report);
    CHECK(parsed.to_string() == text);
}

TEST_CASE("RunReport: plan and regime variants round trip") {
    RunReport plan_report;
    plan_report.command = "plan";
    plan_report.result = SamplePlan{136, 8, 17, 0.25, 1.0};
    CHECK(RunReport::from_json(plan_report.to_json()) == plan_report);

    RunReport regime_report;
    regime_report.command = "regime";
    RegimeResult r;
    r.lambda = 9;
    r.fired = true;
    r.p_bracket_low = 0.002;
    r.p_bracket_high = 0.008;
    r.tests_run = 9;
    r.samples_used = 4321;
    r.per_test_delta = 0.00625;
    regime_report.result = r;
    CHECK(RunReport::from_json(regime_report.to_json()) == regime_report);
}

TEST_CASE("RunReport: rejects unknown format versions") {
    RunReport report;
    report.result = SamplePlan{};
    auto j = report.to_json();
    j["format_version"] = 2;
    CHECK_THROWS_AS(RunReport::from_json(j), std::invalid_argument);
}

TEST_CASE("ingestion: text and binary encodings agree") {
    const std::vector<std::string> words{"alpha", "beta", "alpha", "gamma", "", "beta"};
    std::ostringstream text;
    for (const auto& w : words) text << w << "\n";
    std::istringstream text_in(text.str());
    const auto text_tokens = read_text_tokens(text_in);
    REQUIRE(text_tokens.size() == words.size());

    std::ostringstream binary;
    for (const auto& w : words) {
        const Token t = fnv1a64(w);
        for (int i = 0; i < 8; ++i)
            binary.put(static_cast<char>((t >> (8 * i)) & 0xff));
    }
    std::istringstream binary_in(binary.str());
    const auto binary_tokens = read_binary_tokens(binary_in);
    CHECK(binary_tokens == text_tokens);
}

TEST_CASE("ingestion: equal strings collide, distinct strings do not (desk scale)") {
    CHECK(fnv1a64("token") == fnv1a64("token"));
    CHECK(fnv1a64("token") != fnv1a64("tokem"));
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);  // FNV-1a offset basis
}

TEST_CASE("ingestion: truncated binary records are rejected") {
    std::istringstream in(std::string("\x01\x02\x03", 3));
    CHECK_THROWS_AS(read_binary_tokens(in), std::invalid_argument);
}

TEST_CASE("ingestion: CRLF text is normalized") {
    std::istringstream in("a\r\nb\r\n");
    const auto tokens = read_text_tokens(in);
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0] == fnv1a64("a"));
    CHECK(tokens[1] == fnv1a64("b"));
}

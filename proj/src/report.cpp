#include "momest/report.hpp"

namespace momest {

namespace {

using nlohmann::json;

json config_to_json(const EstimatorConfig& c) {
    json j{{"d", c.d}, {"epsilon", c.epsilon}, {"delta", c.delta}, {"seed", c.seed}};
    if (c.batch_size) j["batch_size"] = *c.batch_size;
    return j;
}

EstimatorConfig config_from_json(const json& j) {
    EstimatorConfig c;
    c.d = j.at("d");
    c.epsilon = j.at("epsilon");
    c.delta = j.at("delta");
    c.seed = j.at("seed");
    if (j.contains("batch_size")) c.batch_size = j["batch_size"].get<std::uint64_t>();
    return c;
}

json estimate_to_json(const MomentEstimate& e) {
    json j{{"p_hat", e.p_hat},
           {"d", e.d},
           {"n_used", e.n_used},
           {"n_dropped", e.n_dropped},
           {"n_batches", e.n_batches},
           {"batch_size", e.batch_size}};
    if (e.renyi_entropy_bits)
        j["renyi_entropy_bits"] = *e.renyi_entropy_bits;
    else
        j["entropy_lower_bound_bits"] = e.entropy_lower_bound_bits;
    return j;
}

MomentEstimate estimate_from_json(const json& j) {
    MomentEstimate e;
    e.p_hat = j.at("p_hat");
    e.d = j.at("d");
    e.n_used = j.at("n_used");
    e.n_dropped = j.at("n_dropped");
    e.n_batches = j.at("n_batches");
    e.batch_size = j.at("batch_size");
    if (j.contains("renyi_entropy_bits"))
        e.renyi_entropy_bits = j["renyi_entropy_bits"].get<double>();
    else
        e.entropy_lower_bound_bits = j.at("entropy_lower_bound_bits");
    return e;
}

json plan_to_json(const SamplePlan& p) {
    return {{"n_total", p.n_total},
            {"n_batches", p.n_batches},
            {"batch_size", p.batch_size},
            {"assumed_norm_lower", p.assumed_norm_lower},
            {"variance_ratio", p.variance_ratio}};
}

SamplePlan plan_from_json(const json& j) {
    SamplePlan p;
    p.n_total = j.at("n_total");
    p.n_batches = j.at("n_batches");
    p.batch_size = j.at("batch_size");
    p.assumed_norm_lower = j.at("assumed_norm_lower");
    p.variance_ratio = j.at("variance_ratio");
    return p;
}

json regime_to_json(const RegimeResult& r) {
    return {{"lambda", r.lambda},
            {"fired", r.fired},
            {"p_bracket_low", r.p_bracket_low},
            {"p_bracket_high", r.p_bracket_high},
            {"tests_run", r.tests_run},
            {"samples_used", r.samples_used},
            {"per_test_delta", r.per_test_delta}};
}

RegimeResult regime_from_json(const json& j) {
    RegimeResult r;
    r.lambda = j.at("lambda");
    r.fired = j.at("fired");
    r.p_bracket_low = j.at("p_bracket_low");
    r.p_bracket_high = j.at("p_bracket_high");
    r.tests_run = j.at("tests_run");
    r.samples_used = j.at("samples_used");
    r.per_test_delta = j.at("per_test_delta");
    return r;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
    json j{{"format_version", format_version},
           {"command", command},
           {"config", config_to_json(config)},
           {"wall_ms", wall_ms},
           {"peak_distinct_symbols", peak_distinct_symbols}};
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, MomentEstimate>)
                j["estimate"] = estimate_to_json(r);
            else if constexpr (std::is_same_v<T, SamplePlan>)
                j["plan"] = plan_to_json(r);
            else
                j["regime"] = regime_to_json(r);
        },
        result);
    return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
    RunReport r;
    r.format_version = j.at("format_version");
    if (r.format_version != kReportFormatVersion)
        throw std::invalid_argument("RunReport: unsupported format version");
    r.command = j.at("command");
    r.config = config_from_json(j.at("config"));
    r.wall_ms = j.at("wall_ms");
    r.peak_distinct_symbols = j.at("peak_distinct_symbols");
    if (j.contains("estimate"))
        r.result = estimate_from_json(j["estimate"]);
    else if (j.contains("plan"))
        r.result = plan_from_json(j["plan"]);
    else if (j.contains("regime"))
        r.result = regime_from_json(j["regime"]);
    else
        throw std::invalid_argument("RunReport: missing result section");
    return r;
}

bool operator==(const RunReport& a, const RunReport& b) {
    return a.to_json() == b.to_json();
}

}  // namespace momest

#include "momest/planner.hpp"

#include <cmath>
#include <stdexcept>

namespace momest {

BernsteinTail bernstein_tail(std::uint64_t m, double epsilon, double B) {
    if (m < 1) throw std::invalid_argument("bernstein_tail: m must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("bernstein_tail: epsilon must be > 0");
    if (!(B > 0.0)) throw std::invalid_argument("bernstein_tail: B must be > 0");
    BernsteinTail t;
    const double md = static_cast<double>(m);
    t.tight = 2.0 * std::exp(-md * epsilon * epsilon / (2.0 * B + 2.0 * B * epsilon / 3.0));
    t.loose = 2.0 * std::exp(-3.0 * md * epsilon * epsilon / (8.0 * B));
    t.loose_valid = epsilon <= 1.0;
    return t;
}

std::uint64_t required_batches(double epsilon, double delta, double B) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("required_batches: epsilon must be in (0,1]");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("required_batches: delta must be in (0,1)");
    if (!(B > 0.0)) throw std::invalid_argument("required_batches: B must be > 0");
    const double m = 8.0 * B * std::log(2.0 / delta) / (3.0 * epsilon * epsilon);
    return static_cast<std::uint64_t>(std::ceil(m));
}

std::uint64_t batch_size_for_norm(int d, double norm_lower) {
    if (d < 2) throw std::invalid_argument("batch_size_for_norm: d must be >= 2");
    if (!(norm_lower > 0.0 && norm_lower <= 1.0))
        throw std::domain_error("batch_size_for_norm: norm_lower must be in (0,1]");
    const double dd = static_cast<double>(d);
    auto n0 = static_cast<std::uint64_t>(std::floor(2.0 * dd / norm_lower)) + 1;
    const std::uint64_t clamp = 2 * static_cast<std::uint64_t>(d) * d + 1;
    return n0 > clamp ? n0 : clamp;
}

SamplePlan plan_samples(const EstimatorConfig& config, double entropy_upper_bits) {
    config.validate();
    if (entropy_upper_bits < 0.0)
        throw std::invalid_argument("plan_samples: entropy bound must be >= 0");
    const double dd = static_cast<double>(config.d);
    SamplePlan plan;
    plan.assumed_norm_lower = std::exp2(-(1.0 - 1.0 / dd) * entropy_upper_bits);
    plan.variance_ratio = 1.0;
    plan.batch_size = config.batch_size ? *config.batch_size
                                        : batch_size_for_norm(config.d, plan.assumed_norm_lower);
    plan.n_batches = required_batches(config.epsilon, config.delta, plan.variance_ratio);
    plan.n_total = plan.n_batches * plan.batch_size;
    return plan;
}

double variance_bound_exact(std::uint64_t n, int d, const std::vector<double>& moments) {
    if (d < 2) throw std::invalid_argument("variance_bound_exact: d must be >= 2");
    if (n < 2 * static_cast<std::uint64_t>(d))
        throw std::invalid_argument("variance_bound_exact: n must be >= 2d");
    if (moments.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("variance_bound_exact: need moments of order d..2d");
    const std::uint64_t du = static_cast<std::uint64_t>(d);
    double sum = 0.0;
    // k = |i ∩ j| runs 1..d; the k = 0 tuples are independent and do not
    // contribute covariance. moments[2d-k - d] = sum_x p(x)^(2d-k).
    for (std::uint64_t k = 1; k <= du; ++k) {
        const double weight = binomial(du, k).convert_to<double>() *
                              binomial(n - du, du - k).convert_to<double>();
        sum += weight * moments[du - k];
    }
    return sum / binomial(n, du).convert_to<double>();
}

double variance_bound_simple(std::uint64_t n, int d, double norm_d) {
    if (d < 2) throw std::invalid_argument("variance_bound_simple: d must be >= 2");
    if (!(norm_d > 0.0 && norm_d <= 1.0))
        throw std::invalid_argument("variance_bound_simple: norm_d must be in (0,1]");
    if (n <= 2 * static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d))
        throw std::domain_error("variance_bound_simple: requires n > 2d^2");
    return 2.0 * std::pow(norm_d, d) /
           binomial(n, static_cast<std::uint64_t>(d)).convert_to<double>();
}

}  // namespace momest

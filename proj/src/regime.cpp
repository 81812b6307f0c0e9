#include "momest/regime.hpp"

#include <cmath>

#include "momest/collision.hpp"
#include "momest/planner.hpp"

namespace momest {

RegimeResult learn_regime(std::span<const Token> samples, int d,
                          double delta_total, std::uint64_t lambda_max) {
    if (d < 2) throw std::invalid_argument("learn_regime: d must be >= 2");
    if (!(delta_total > 0.0 && delta_total < 1.0))
        throw std::invalid_argument("learn_regime: delta_total must be in (0,1)");
    if (lambda_max < 1) throw std::invalid_argument("learn_regime: lambda_max must be >= 1");

    RegimeResult result;
    result.per_test_delta = delta_total / static_cast<double>(lambda_max);
    const std::uint64_t m = required_batches(1.0, result.per_test_delta, 1.0);

    std::size_t cursor = 0;
    for (std::uint64_t lambda = 1; lambda <= lambda_max; ++lambda) {
        const double p0 = std::exp2(-static_cast<double>(lambda));
        const double norm_lower = std::pow(p0, 1.0 / static_cast<double>(d));
        const std::uint64_t n0 = batch_size_for_norm(d, norm_lower);
        const std::uint64_t need = n0 * m;
        if (samples.size() - cursor < need) {
            throw StreamExhaustedError(result, need - (samples.size() - cursor));
        }
        std::vector<double> values;
        values.reserve(m);
        for (std::uint64_t b = 0; b < m; ++b)
            values.push_back(
                batch_estimate(samples.subspan(cursor + b * n0, n0), d).normalized);
        cursor += need;
        const double p_hat = compensated_sum(values) / static_cast<double>(m);

        result.lambda = lambda;
        ++result.tests_run;
        result.samples_used = cursor;
        if (p_hat > 2.0 * p0) {
            result.fired = true;
            result.p_bracket_low = p_hat / 2.0;
            result.p_bracket_high = 2.0 * p_hat;
            return result;
        }
        if (lambda == 1 && p_hat > 0.5) {
            // 2 p0 = 1 can never be strictly exceeded; close the point-mass
            // corner with the one-sided bracket up to 1.
            result.fired = true;
            result.p_bracket_low = p_hat / 2.0;
            result.p_bracket_high = 1.0;
            return result;
        }
    }
    result.fired = false;
    result.p_bracket_low = 0.0;
    result.p_bracket_high = 2.0 * std::exp2(-static_cast<double>(lambda_max));
    return result;
}

}  // namespace momest

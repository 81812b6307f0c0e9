#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "momest/core.hpp"

namespace momest {

struct RegimeResult {
    std::uint64_t lambda = 0;    // final threshold index
    bool fired = false;          // whether a test fired (or the lambda=1 rule)
    // Bracket claimed to contain p at confidence 1 - delta_total. When no
    // test fires through lambda_max, low is 0 and high = 2 * 2^-lambda_max.
    double p_bracket_low = 0.0;
    double p_bracket_high = 1.0;
    std::uint64_t tests_run = 0;
    std::uint64_t samples_used = 0;
    double per_test_delta = 0.0;
};

// Thrown when the stream runs out mid-test; carries the last completed
// threshold and the result as of that point.
class StreamExhaustedError : public std::runtime_error {
public:
    StreamExhaustedError(RegimeResult partial, std::uint64_t needed)
        : std::runtime_error("stream exhausted during regime test " +
                             std::to_string(partial.tests_run + 1) + ", need " +
                             std::to_string(needed) + " more samples"),
          partial_result(partial),
          samples_needed(needed) {}

    RegimeResult partial_result;  // last completed lambda
    std::uint64_t samples_needed;
};

// Doubling search over thresholds p0 = 2^-lambda, lambda = 1..lambda_max.
// Each test runs the collision estimator with eps = 1 under the assumption
// p >= p0 (batch size from the norm bound, batches at per-test confidence
// delta_total / lambda_max) and fires when p_hat > 2 p0, reporting the
// bracket [p_hat/2, 2 p_hat]. At lambda = 1 a non-firing pass with
// p_hat > 1/2 also terminates, with bracket [p_hat/2, 1]. If no test
// fires, reports p < 2 * 2^-lambda_max.
RegimeResult learn_regime(std::span<const Token> samples, int d,
                          double delta_total, std::uint64_t lambda_max);

}  // namespace momest

#include "momest/core.hpp"

#include <cmath>

namespace momest {

void EstimatorConfig::validate() const {
    if (d < 2) throw std::invalid_argument("order d must be >= 2");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must be in (0,1]");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must be in (0,1)");
    if (batch_size && *batch_size < static_cast<std::uint64_t>(d))
        throw std::invalid_argument("batch_size must be >= d");
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (n > kBinomialMaxN || k > kBinomialMaxK)
        throw std::out_of_range("binomial: outside the n <= 1e6, k <= 16 envelope");
    if (k > n) return 0;
    // Multiplicative formula; every prefix product is divisible by i!.
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

double moment_to_entropy(double p, int d) {
    if (!(p > 0.0)) throw std::domain_error("moment_to_entropy: p must be positive");
    if (d < 2) throw std::invalid_argument("order d must be >= 2");
    return std::log2(p) / (1.0 - d);
}

}  // namespace momest

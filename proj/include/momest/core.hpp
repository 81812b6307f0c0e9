#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace momest {

// Opaque sample symbol. Textual input is hashed to 64 bits at the CLI
// boundary; the library only ever compares tokens for equality.
using Token = std::uint64_t;

// Exact integer type for collision counts and binomials. C(n0,d) exceeds
// 64 bits long before the operating envelope does.
using BigInt = boost::multiprecision::cpp_int;

struct EstimatorConfig {
    int d = 2;                              // moment order, d >= 2
    double epsilon = 0.5;                   // relative error target, (0,1]
    double delta = 0.1;                     // failure probability, (0,1)
    std::optional<std::uint64_t> batch_size;  // n0 override
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

struct BatchResult {
    BigInt collision_count;       // exact number of monochromatic d-combinations
    std::uint64_t batch_size = 0; // n0
    double normalized = 0.0;      // collision_count / C(n0,d), in [0,1]
};

struct MomentEstimate {
    double p_hat = 0.0;              // mean of normalized batch counts
    // Entropy in bits; empty when p_hat == 0 (no collisions observed), in
    // which case entropy_lower_bound_bits carries the "entropy >= bound"
    // marker derived from the estimator's resolution.
    std::optional<double> renyi_entropy_bits;
    double entropy_lower_bound_bits = 0.0;
    int d = 2;
    std::uint64_t n_used = 0;     // samples consumed (n_batches * batch_size)
    std::uint64_t n_dropped = 0;  // leftover samples past the last full batch
    std::uint64_t n_batches = 0;
    std::uint64_t batch_size = 0;
};

// Per-batch symbol -> occurrence count. Counts of present keys are >= 1.
struct FrequencyTable {
    std::map<Token, std::uint64_t> counts;
    std::uint64_t total = 0;

    void add(Token x, std::uint64_t k = 1) {
        counts[x] += k;
        total += k;
    }
    // Pointwise count addition.
    void merge(const FrequencyTable& other) {
        for (const auto& [x, c] : other.counts) add(x, c);
    }
};

// Operating envelope for exact binomials.
inline constexpr std::uint64_t kBinomialMaxN = 1'000'000;
inline constexpr std::uint64_t kBinomialMaxK = 16;

// Exact C(n,k). Returns 0 when k > n. Throws std::out_of_range outside
// the envelope n <= 10^6, k <= 16.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// H_d = log2(p) / (1-d), in bits. Throws std::domain_error for p <= 0;
// zero-collision batches must be handled by the caller.
double moment_to_entropy(double p, int d);

// Thrown by the estimator when the input cannot fill one full batch.
class InsufficientDataError : public std::runtime_error {
public:
    InsufficientDataError(std::uint64_t required, std::uint64_t available)
        : std::runtime_error("insufficient samples: need " +
                             std::to_string(required) + ", have " +
                             std::to_string(available)),
          required_samples(required),
          available_samples(available) {}

    std::uint64_t required_samples;
    std::uint64_t available_samples;
};

}  // namespace momest

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "momest/core.hpp"

namespace momest {

// Explicit finite distribution over symbols 0..support_size-1. Grounds the
// generators and every closed-form oracle in the test suites.
struct DiscreteDistribution {
    std::vector<double> probabilities;  // all > 0, sum to 1 after renormalization

    std::size_t support_size() const { return probabilities.size(); }
    void validate() const;

    // Families with closed-form or directly summable moments.
    static DiscreteDistribution uniform(std::size_t m);
    static DiscreteDistribution point_mass();
    static DiscreteDistribution two_point(double p);
    static DiscreteDistribution zipf(std::size_t m, double s);
    static DiscreteDistribution geometric_truncated(std::size_t m, double ratio);
    // One heavy symbol plus a uniform tail over m-1 symbols; stresses the
    // regime learner near threshold boundaries.
    static DiscreteDistribution two_spike(std::size_t m, double heavy_mass);

    // Compact text form used by the CLI, e.g. "zipf:m=1024,s=1.0".
    static DiscreteDistribution parse_spec(const std::string& spec);
};

// sum_x p(x)^d by compensated direct summation.
double exact_moment(const DiscreteDistribution& dist, int d);

// ||p||_d = (sum_x p(x)^d)^(1/d).
double exact_norm(const DiscreteDistribution& dist, int d);

// moment_to_entropy(exact_moment(dist,d), d), bits.
double exact_entropy(const DiscreteDistribution& dist, int d);

// n iid samples by inverse-CDF lookup. The PRNG is pinned to std::mt19937_64
// seeded directly with `seed`; uniforms are (engine() >> 11) * 2^-53. Output
// tokens are the symbol indices.
std::vector<Token> sample(const DiscreteDistribution& dist, std::uint64_t n,
                          std::uint64_t seed);

// Exact E[p_batch] for a batch of n0 samples: enumerates all support^n0
// outcome sequences with their probabilities. Must equal exact_moment to
// 1e-12. Throws std::out_of_range when support^n0 > 10^6.
double exhaustive_expectation_oracle(const DiscreteDistribution& dist,
                                     std::uint64_t n0, int d);

}  // namespace momest

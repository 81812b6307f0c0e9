#pragma once

#include <cstdint>
#include <vector>

#include "momest/core.hpp"

namespace momest {

struct SamplePlan {
    std::uint64_t n_total = 0;     // n_batches * batch_size
    std::uint64_t n_batches = 0;   // m
    std::uint64_t batch_size = 0;  // n0
    double assumed_norm_lower = 0; // lower bound on ||p||_d used
    double variance_ratio = 1.0;   // B in the Bernstein bound
};

struct BernsteinTail {
    double tight = 1.0;       // 2 exp(-m eps^2 / (2B + 2B eps/3))
    double loose = 1.0;       // 2 exp(-3 m eps^2 / (8B))
    bool loose_valid = true;  // the loose form only dominates for eps <= 1

    // Capped tight-form probability; never larger than the loose form
    // when that form is valid.
    double value() const { return tight < 1.0 ? tight : 1.0; }
};

// Two-sided Bernstein tail for the mean of m iid terms with relative error
// eps and variance ratio bound B (Var <= B * mean^2).
BernsteinTail bernstein_tail(std::uint64_t m, double epsilon, double B);

// ceil(8 B ln(2/delta) / (3 eps^2)); with B = 1 this is the batch count
// that drives the loose Bernstein form below delta.
std::uint64_t required_batches(double epsilon, double delta, double B = 1.0);

// Batch size guaranteeing variance ratio B <= 1 when ||p||_d >= norm_lower:
// floor(2d / norm_lower) + 1, clamped up to n0 > 2d^2 so the simple
// variance bound applies. Throws std::domain_error for norm_lower <= 0.
std::uint64_t batch_size_for_norm(int d, double norm_lower);

// Full plan from an entropy upper bound (bits): converts the bound to a
// norm lower bound via ||p||_d = 2^(-(1-1/d) H_d) and composes
// batch_size_for_norm with required_batches at B = 1.
SamplePlan plan_samples(const EstimatorConfig& config, double entropy_upper_bits);

// Variance bound for one batch of size n from the collision-pattern
// expansion. moments[j] must hold sum_x p(x)^(d+j) for j = 0..d, i.e. the
// moments of order d..2d. Requires n >= 2d.
double variance_bound_exact(std::uint64_t n, int d, const std::vector<double>& moments);

// 2 ||p||_d^d / C(n,d), valid for n > 2d^2 (throws std::domain_error
// otherwise). Dominates variance_bound_exact for consistent moments.
double variance_bound_simple(std::uint64_t n, int d, double norm_d);

}  // namespace momest

#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "momest/core.hpp"

namespace momest {

// Basis-change coefficients between power sums and binomial sums of symbol
// counts: second kind S(k,j) maps binomials to powers, signed first kind
// s(k,j) maps powers to falling factorials. Immutable after construction.
class StirlingTable {
public:
    explicit StirlingTable(int k_max);

    int k_max() const { return k_max_; }

    // S(k,j), recurrence S(k,j) = j S(k-1,j) + S(k-1,j-1). Zero for j > k.
    const BigInt& second_kind(int k, int j) const;

    // Signed s(k,j), recurrence s(k,j) = s(k-1,j-1) - (k-1) s(k-1,j).
    const BigInt& first_kind_signed(int k, int j) const;

private:
    int k_max_;
    std::vector<std::vector<BigInt>> second_;
    std::vector<std::vector<BigInt>> first_signed_;
};

// S(k,j) through a table of size k; convenience for one-off queries.
BigInt stirling_second(int k, int j);

// Executable check of x^k = sum_j S(k,j) j! C(x,j) in exact arithmetic.
bool basis_identity_check(std::uint64_t x, int k);

// Incrementally maintained exact power sums F[j] = sum_x n_x^j, j = 1..d,
// over a token stream. Requires per-symbol counts, so memory is linear in
// the number of distinct symbols; this is the exact path.
class PowerSums {
public:
    PowerSums(int d);

    int order() const { return d_; }
    std::uint64_t total() const { return n_; }

    // F[j]; j in 1..d.
    const BigInt& power_sum(int j) const;

    // Appends one symbol: on count c -> c+1, F[j] += (c+1)^j - c^j.
    void update(Token x);

    std::size_t distinct_symbols() const { return counts_.size(); }

private:
    int d_;
    std::uint64_t n_ = 0;
    std::unordered_map<Token, std::uint64_t> counts_;
    std::vector<BigInt> sums_;  // sums_[j-1] = F[j]
};

// sum_x C(n_x,d) from power sums alone: (1/d!) sum_{j=1..d} s(d,j) F[j].
// The division by d! is exact; a nonzero remainder is a fatal consistency
// error (std::logic_error).
BigInt collision_sum_from_power_sums(const PowerSums& F, int d);

// Classical sampling estimator for the empirical moment F_k = sum_x n_x^k:
// sample a position, count occurrences in the suffix, estimate
// n (r^k - (r-1)^k); median over `groups` of means over `reps`.
double ams_fk_estimate(std::span<const Token> stream, int k,
                       std::uint64_t reps, std::uint64_t groups,
                       std::uint64_t seed);

// Derandomized full-position sweep: sum_i (r_i^k - (r_i-1)^k), which
// telescopes to exactly F_k.
BigInt ams_fk_derandomized(std::span<const Token> stream, int k);

}  // namespace momest

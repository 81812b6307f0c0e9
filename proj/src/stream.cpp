#include "momest/stream.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "momest/collision.hpp"

namespace momest {

namespace {

BigInt int_pow(BigInt base, int exp) {
    BigInt out = 1;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

BigInt factorial(int d) {
    BigInt f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

}  // namespace

StirlingTable::StirlingTable(int k_max) : k_max_(k_max) {
    if (k_max < 1) throw std::invalid_argument("StirlingTable: k_max must be >= 1");
    second_.resize(k_max + 1);
    first_signed_.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        second_[k].assign(k + 1, 0);
        first_signed_[k].assign(k + 1, 0);
    }
    second_[0][0] = 1;
    first_signed_[0][0] = 1;
    for (int k = 1; k <= k_max; ++k) {
        for (int j = 1; j <= k; ++j) {
            second_[k][j] = second_[k - 1][j - 1];
            first_signed_[k][j] = first_signed_[k - 1][j - 1];
            if (j <= k - 1) {
                second_[k][j] += j * second_[k - 1][j];
                first_signed_[k][j] -= (k - 1) * first_signed_[k - 1][j];
            }
        }
    }
}

const BigInt& StirlingTable::second_kind(int k, int j) const {
    if (k < 0 || k > k_max_ || j < 0)
        throw std::out_of_range("StirlingTable: index outside table");
    static const BigInt zero = 0;
    if (j > k) return zero;
    return second_[k][j];
}

const BigInt& StirlingTable::first_kind_signed(int k, int j) const {
    if (k < 0 || k > k_max_ || j < 0)
        throw std::out_of_range("StirlingTable: index outside table");
    static const BigInt zero = 0;
    if (j > k) return zero;
    return first_signed_[k][j];
}

BigInt stirling_second(int k, int j) {
    if (k < 0 || j < 0 || j > k)
        throw std::out_of_range("stirling_second: need 0 <= j <= k");
    if (k == 0) return 1;
    return StirlingTable(k).second_kind(k, j);
}

bool basis_identity_check(std::uint64_t x, int k) {
    if (x > 1000) throw std::out_of_range("basis_identity_check: x must be <= 1000");
    if (k < 1) throw std::invalid_argument("basis_identity_check: k must be >= 1");
    const StirlingTable table(k);
    BigInt rhs = 0;
    BigInt jfact = 1;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) jfact *= j;
        rhs += table.second_kind(k, j) * jfact * binomial(x, j);
    }
    return rhs == int_pow(x, k);
}

PowerSums::PowerSums(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("PowerSums: d must be >= 1");
    sums_.assign(d, 0);
}

const BigInt& PowerSums::power_sum(int j) const {
    if (j < 1 || j > d_) throw std::out_of_range("PowerSums: j outside 1..d");
    return sums_[j - 1];
}

void PowerSums::update(Token x) {
    const std::uint64_t c = counts_[x]++;
    ++n_;
    for (int j = 1; j <= d_; ++j)
        sums_[j - 1] += int_pow(c + 1, j) - int_pow(c, j);
}

BigInt collision_sum_from_power_sums(const PowerSums& F, int d) {
    if (d < 2) throw std::invalid_argument("collision_sum_from_power_sums: d must be >= 2");
    if (F.order() < d)
        throw std::invalid_argument("collision_sum_from_power_sums: power sums up to d required");
    const StirlingTable table(d);
    BigInt acc = 0;
    for (int j = 1; j <= d; ++j) acc += table.first_kind_signed(d, j) * F.power_sum(j);
    const BigInt dfact = factorial(d);
    if (acc % dfact != 0)
        throw std::logic_error("collision_sum_from_power_sums: inexact division by d!");
    return acc / dfact;
}

namespace {

// Suffix occurrence counts r_i = |{j >= i : stream[j] = stream[i]}|.
std::vector<std::uint64_t> suffix_counts(std::span<const Token> stream) {
    std::vector<std::uint64_t> r(stream.size());
    std::unordered_map<Token, std::uint64_t> seen;
    seen.reserve(stream.size());
    for (std::size_t i = stream.size(); i-- > 0;) r[i] = ++seen[stream[i]];
    return r;
}

double elementary_estimate(std::uint64_t n, std::uint64_t r, int k) {
    return static_cast<double>(n) *
           ((int_pow(r, k) - int_pow(r - 1, k)).convert_to<double>());
}

}  // namespace

double ams_fk_estimate(std::span<const Token> stream, int k,
                       std::uint64_t reps, std::uint64_t groups,
                       std::uint64_t seed) {
    if (stream.empty()) throw std::domain_error("ams_fk_estimate: empty stream");
    if (k < 2) throw std::invalid_argument("ams_fk_estimate: k must be >= 2");
    if (reps < 1 || groups < 1)
        throw std::invalid_argument("ams_fk_estimate: reps and groups must be >= 1");
    const auto r = suffix_counts(stream);
    const std::uint64_t n = stream.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pos(0, n - 1);
    std::vector<double> means;
    means.reserve(groups);
    for (std::uint64_t g = 0; g < groups; ++g) {
        std::vector<double> estimates;
        estimates.reserve(reps);
        for (std::uint64_t i = 0; i < reps; ++i)
            estimates.push_back(elementary_estimate(n, r[pos(rng)], k));
        means.push_back(compensated_sum(estimates) / static_cast<double>(reps));
    }
    std::sort(means.begin(), means.end());
    return means.size() % 2 == 1
               ? means[means.size() / 2]
               : 0.5 * (means[means.size() / 2 - 1] + means[means.size() / 2]);
}

BigInt ams_fk_derandomized(std::span<const Token> stream, int k) {
    if (stream.empty()) throw std::domain_error("ams_fk_derandomized: empty stream");
    if (k < 1) throw std::invalid_argument("ams_fk_derandomized: k must be >= 1");
    const auto r = suffix_counts(stream);
    BigInt total = 0;
    for (std::uint64_t ri : r) total += int_pow(ri, k) - int_pow(ri - 1, k);
    return total;
}

}  // namespace momest

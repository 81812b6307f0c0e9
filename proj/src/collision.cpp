#include "momest/collision.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "momest/planner.hpp"

namespace momest {

namespace {

std::uint64_t factorial_u64(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f;  // exact for d <= 20
}

// C(c,d) for one symbol count; u128 falling-factorial fast path, BigInt
// fallback when the product could exceed 128 bits.
BigInt choose_count(std::uint64_t c, int d, std::uint64_t d_factorial) {
    if (c < static_cast<std::uint64_t>(d)) return 0;
    const unsigned width = std::bit_width(c);
    if (static_cast<unsigned>(d) * width <= 120) {
        unsigned __int128 prod = 1;
        for (int i = 0; i < d; ++i) prod *= c - static_cast<std::uint64_t>(i);
        prod /= d_factorial;
        BigInt out = static_cast<std::uint64_t>(prod >> 64);
        out <<= 64;
        out += static_cast<std::uint64_t>(prod);
        return out;
    }
    return binomial(c, static_cast<std::uint64_t>(d));
}

double normalize_count(const BigInt& count, std::uint64_t n0, int d) {
    const BigInt denom = binomial(n0, static_cast<std::uint64_t>(d));
    // Exact rational -> double via a scaled quotient keeps the result
    // within one ulp.
    const BigInt scaled = (count << 64) / denom;
    return scaled.convert_to<double>() * std::ldexp(1.0, -64);
}

MomentEstimate finalize(double p_hat, const EstimatorConfig& config,
                        std::uint64_t n0, std::uint64_t m, std::uint64_t n_available) {
    MomentEstimate est;
    est.p_hat = p_hat;
    est.d = config.d;
    est.batch_size = n0;
    est.n_batches = m;
    est.n_used = n0 * m;
    est.n_dropped = n_available - est.n_used;
    if (p_hat > 0.0) {
        est.renyi_entropy_bits = moment_to_entropy(p_hat, config.d);
    } else {
        // Estimator resolution: one collision in one batch would have read
        // 1 / (C(n0,d) * m); the true entropy is at least this bound.
        const double resolution =
            normalize_count(1, n0, config.d) / static_cast<double>(m);
        est.entropy_lower_bound_bits = moment_to_entropy(resolution, config.d);
    }
    return est;
}

}  // namespace

double compensated_sum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

BigInt count_collisions(SampleBatch batch, int d) {
    if (d < 2) throw std::invalid_argument("count_collisions: d must be >= 2");
    if (batch.size() < static_cast<std::size_t>(d))
        throw std::invalid_argument("count_collisions: batch shorter than d");
    std::unordered_map<Token, std::uint64_t> counts;
    counts.reserve(batch.size());
    for (Token x : batch) ++counts[x];
    const std::uint64_t df = factorial_u64(d);
    BigInt total = 0;
    for (const auto& [x, c] : counts) total += choose_count(c, d, df);
    return total;
}

BigInt count_collisions_bruteforce(SampleBatch batch, int d) {
    if (d < 2) throw std::invalid_argument("count_collisions_bruteforce: d must be >= 2");
    const std::size_t n = batch.size();
    if (n < static_cast<std::size_t>(d))
        throw std::invalid_argument("count_collisions_bruteforce: batch shorter than d");
    if (binomial(n, static_cast<std::uint64_t>(d)) > 1'000'000)
        throw std::out_of_range("count_collisions_bruteforce: combinatorial budget exceeded");
    // Enumerate index d-combinations i_1 < ... < i_d.
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    BigInt total = 0;
    while (true) {
        bool mono = true;
        for (std::size_t i = 1; i < idx.size() && mono; ++i)
            mono = batch[idx[i]] == batch[idx[0]];
        if (mono) ++total;
        // next combination
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (idx[pos] != n - idx.size() + pos) break;
            if (pos == 0) return total;
        }
        ++idx[pos];
        for (std::size_t i = pos + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
}

BatchResult batch_estimate(SampleBatch batch, int d) {
    BatchResult r;
    r.collision_count = count_collisions(batch, d);
    r.batch_size = batch.size();
    r.normalized = normalize_count(r.collision_count, r.batch_size, d);
    return r;
}

ResolvedBatching resolve_batching(std::uint64_t n_available, const EstimatorConfig& config) {
    config.validate();
    ResolvedBatching rb;
    rb.n_batches = required_batches(config.epsilon, config.delta, 1.0);
    if (config.batch_size) {
        rb.batch_size = *config.batch_size;
    } else {
        rb.batch_size = n_available / rb.n_batches;
        if (rb.batch_size < static_cast<std::uint64_t>(config.d))
            throw InsufficientDataError(rb.n_batches * static_cast<std::uint64_t>(config.d),
                                        n_available);
    }
    if (n_available < rb.batch_size * rb.n_batches)
        throw InsufficientDataError(rb.batch_size * rb.n_batches, n_available);
    return rb;
}

namespace {

std::vector<double> batch_values(std::span<const Token> samples,
                                 std::uint64_t n0, std::uint64_t m, int d) {
    std::vector<double> values;
    values.reserve(m);
    for (std::uint64_t b = 0; b < m; ++b)
        values.push_back(batch_estimate(samples.subspan(b * n0, n0), d).normalized);
    return values;
}

}  // namespace

MomentEstimate estimate_moment(std::span<const Token> samples, const EstimatorConfig& config) {
    const auto rb = resolve_batching(samples.size(), config);
    const auto values = batch_values(samples, rb.batch_size, rb.n_batches, config.d);
    const double p_hat = compensated_sum(values) / static_cast<double>(rb.n_batches);
    return finalize(p_hat, config, rb.batch_size, rb.n_batches, samples.size());
}

MomentEstimate median_of_means_estimate(std::span<const Token> samples,
                                        const EstimatorConfig& config,
                                        std::uint64_t groups) {
    if (groups < 1) throw std::invalid_argument("median_of_means: groups must be >= 1");
    const auto rb = resolve_batching(samples.size(), config);
    if (groups > rb.n_batches)
        throw std::invalid_argument("median_of_means: groups exceed batch count");
    const auto values = batch_values(samples, rb.batch_size, rb.n_batches, config.d);
    // Contiguous groups; the first (n_batches mod groups) get one extra batch.
    std::vector<double> means;
    means.reserve(groups);
    const std::uint64_t base = rb.n_batches / groups;
    const std::uint64_t extra = rb.n_batches % groups;
    std::size_t offset = 0;
    for (std::uint64_t g = 0; g < groups; ++g) {
        const std::uint64_t len = base + (g < extra ? 1 : 0);
        std::span<const double> group(values.data() + offset, len);
        means.push_back(compensated_sum(group) / static_cast<double>(len));
        offset += len;
    }
    std::sort(means.begin(), means.end());
    const double median = means.size() % 2 == 1
                              ? means[means.size() / 2]
                              : 0.5 * (means[means.size() / 2 - 1] + means[means.size() / 2]);
    return finalize(median, config, rb.batch_size, rb.n_batches, samples.size());
}

}  // namespace momest

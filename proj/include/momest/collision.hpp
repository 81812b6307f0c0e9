#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "momest/core.hpp"

namespace momest {

// One disjoint block of consecutive samples; the unit on which a single
// elementary estimate is computed.
using SampleBatch = std::span<const Token>;

// Number of monochromatic d-combinations in the batch, sum_x C(n_x, d),
// computed through a frequency table in O(n) time. Throws
// std::invalid_argument when the batch is shorter than d.
BigInt count_collisions(SampleBatch batch, int d);

// Literal d-tuple enumeration; test oracle only. Throws std::out_of_range
// when C(|batch|, d) exceeds 10^6.
BigInt count_collisions_bruteforce(SampleBatch batch, int d);

// Normalized collision count for one batch.
BatchResult batch_estimate(SampleBatch batch, int d);

// Batching resolved for a given input length: n_batches from the Bernstein
// requirement (B = 1), n0 from the config override or floor(n / n_batches).
struct ResolvedBatching {
    std::uint64_t batch_size = 0;
    std::uint64_t n_batches = 0;
};
ResolvedBatching resolve_batching(std::uint64_t n_available, const EstimatorConfig& config);

// The batched moment estimator: splits the input into consecutive disjoint
// batches, counts collisions per batch, returns the compensated mean of
// normalized counts and the derived entropy. Deterministic; leftover
// samples are dropped and reported. Throws InsufficientDataError when the
// input cannot fill the resolved batches.
MomentEstimate estimate_moment(std::span<const Token> samples, const EstimatorConfig& config);

// Benchmark comparator: partitions the batches into `groups` contiguous
// groups and returns the median of per-group means. groups = 1 reduces to
// estimate_moment.
MomentEstimate median_of_means_estimate(std::span<const Token> samples,
                                        const EstimatorConfig& config,
                                        std::uint64_t groups);

// Compensated (Neumaier) left-to-right sum; shared by the estimator and
// the closed-form oracles.
double compensated_sum(std::span<const double> values);

}  // namespace momest

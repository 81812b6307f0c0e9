#include "momest/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "momest/collision.hpp"

namespace momest {

namespace {

void renormalize(std::vector<double>& p) {
    double sum = compensated_sum(p);
    if (!(sum > 0.0)) throw std::invalid_argument("distribution: weights must sum > 0");
    for (double& v : p) v /= sum;
}

std::map<std::string, double> parse_kv(const std::string& args) {
    std::map<std::string, double> kv;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("distribution spec: expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return kv;
}

double require(const std::map<std::string, double>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("distribution spec: missing parameter '" + key + "'");
    return it->second;
}

}  // namespace

void DiscreteDistribution::validate() const {
    if (probabilities.empty())
        throw std::invalid_argument("distribution: empty support");
    double sum = compensated_sum(probabilities);
    for (double p : probabilities)
        if (!(p > 0.0)) throw std::invalid_argument("distribution: probabilities must be > 0");
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("distribution: probabilities must sum to 1");
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t m) {
    if (m == 0) throw std::invalid_argument("uniform: m must be >= 1");
    return {std::vector<double>(m, 1.0 / static_cast<double>(m))};
}

DiscreteDistribution DiscreteDistribution::point_mass() { return uniform(1); }

DiscreteDistribution DiscreteDistribution::two_point(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("two_point: p must be in (0,1)");
    return {{p, 1.0 - p}};
}

DiscreteDistribution DiscreteDistribution::zipf(std::size_t m, double s) {
    if (m == 0) throw std::invalid_argument("zipf: m must be >= 1");
    std::vector<double> p(m);
    for (std::size_t i = 0; i < m; ++i)
        p[i] = std::pow(static_cast<double>(i + 1), -s);
    renormalize(p);
    return {std::move(p)};
}

DiscreteDistribution DiscreteDistribution::geometric_truncated(std::size_t m, double ratio) {
    if (m == 0) throw std::invalid_argument("geometric: m must be >= 1");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("geometric: ratio must be in (0,1)");
    std::vector<double> p(m);
    double w = 1.0;
    for (std::size_t i = 0; i < m; ++i, w *= ratio) p[i] = w;
    renormalize(p);
    return {std::move(p)};
}

DiscreteDistribution DiscreteDistribution::two_spike(std::size_t m, double heavy_mass) {
    if (m < 2) throw std::invalid_argument("two_spike: m must be >= 2");
    if (!(heavy_mass > 0.0 && heavy_mass < 1.0))
        throw std::invalid_argument("two_spike: heavy_mass must be in (0,1)");
    std::vector<double> p(m, (1.0 - heavy_mass) / static_cast<double>(m - 1));
    p[0] = heavy_mass;
    return {std::move(p)};
}

DiscreteDistribution DiscreteDistribution::parse_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    const auto kv = colon == std::string::npos ? std::map<std::string, double>{}
                                               : parse_kv(spec.substr(colon + 1));
    if (family == "uniform")
        return uniform(static_cast<std::size_t>(require(kv, "m")));
    if (family == "point") return point_mass();
    if (family == "twopoint") return two_point(require(kv, "p"));
    if (family == "zipf")
        return zipf(static_cast<std::size_t>(require(kv, "m")), require(kv, "s"));
    if (family == "geometric")
        return geometric_truncated(static_cast<std::size_t>(require(kv, "m")),
                                   require(kv, "q"));
    if (family == "twospike")
        return two_spike(static_cast<std::size_t>(require(kv, "m")), require(kv, "heavy"));
    throw std::invalid_argument("distribution spec: unknown family '" + family + "'");
}

double exact_moment(const DiscreteDistribution& dist, int d) {
    if (d < 1) throw std::invalid_argument("exact_moment: d must be >= 1");
    std::vector<double> terms;
    terms.reserve(dist.probabilities.size());
    for (double p : dist.probabilities) terms.push_back(std::pow(p, d));
    return compensated_sum(terms);
}

double exact_norm(const DiscreteDistribution& dist, int d) {
    return std::pow(exact_moment(dist, d), 1.0 / static_cast<double>(d));
}

double exact_entropy(const DiscreteDistribution& dist, int d) {
    return moment_to_entropy(exact_moment(dist, d), d);
}

std::vector<Token> sample(const DiscreteDistribution& dist, std::uint64_t n,
                          std::uint64_t seed) {
    std::vector<double> cdf(dist.probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        acc += dist.probabilities[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;
    std::mt19937_64 rng(seed);
    std::vector<Token> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out.push_back(static_cast<Token>(it - cdf.begin()));
    }
    return out;
}

double exhaustive_expectation_oracle(const DiscreteDistribution& dist,
                                     std::uint64_t n0, int d) {
    const std::size_t k = dist.support_size();
    if (n0 < static_cast<std::uint64_t>(d))
        throw std::invalid_argument("exhaustive oracle: n0 must be >= d");
    double budget = std::pow(static_cast<double>(k), static_cast<double>(n0));
    if (budget > 1e6)
        throw std::out_of_range("exhaustive oracle: enumeration budget exceeded");

    const BigInt denom = binomial(n0, static_cast<std::uint64_t>(d));
    std::vector<Token> outcome(n0, 0);
    std::vector<double> terms;
    while (true) {
        double prob = 1.0;
        for (Token x : outcome) prob *= dist.probabilities[x];
        const BigInt count = count_collisions(outcome, d);
        const double normalized =
            ((count << 64) / denom).convert_to<double>() * 0x1p-64;
        terms.push_back(prob * normalized);
        // next outcome in lexicographic order
        std::size_t pos = n0;
        while (pos > 0) {
            --pos;
            if (++outcome[pos] < k) break;
            outcome[pos] = 0;
            if (pos == 0) return compensated_sum(terms);
        }
    }
}

}  // namespace momest

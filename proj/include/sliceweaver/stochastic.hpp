#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sliceweaver/rng.hpp"

namespace sliceweaver {

/// Single-common-factor sampler. A_i = a' + sqrt(cov) X0 + sqrt(var - cov) X_i
/// with independent standard normals, so the target mean, variance and
/// pairwise covariance are hit exactly.
struct FactorModel {
    double a_prime = 0;
    double sigma_a_sq = 0;
    double cov_a = 0;
    int u = 1;

    void validate() const;
};

struct McEstimate {
    double mean = 0;
    double variance = 0;
    double std_error = 0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
};

/// One replication of correlated relative allocations.
std::vector<double> sample_allocations(const FactorModel& model, SplitMix64& rng);

/// Unbiased sample variance of the relative load over independent
/// replications. Replication r draws from replication_seed(seed, r), and the
/// reduction runs in replication order, so results depend only on
/// (model, n_samples, seed).
McEstimate mc_variance_of_load(const FactorModel& model, long long n_samples,
                               std::uint64_t seed);

/// Fraction of replications whose relative load stays within budget.
McEstimate mc_sla_probability(const FactorModel& model, long long n_samples,
                              std::uint64_t seed);

}  // namespace sliceweaver

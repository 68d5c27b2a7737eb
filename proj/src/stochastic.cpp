#include "sliceweaver/stochastic.hpp"

#include <cmath>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

void sample_into(const FactorModel& model, SplitMix64& rng, std::span<double> out) {
    const double common_scale = std::sqrt(model.cov_a);
    const double idio_scale = std::sqrt(model.sigma_a_sq - model.cov_a);
    const double common = common_scale * rng.next_normal();
    for (double& value : out) {
        value = model.a_prime + common + idio_scale * rng.next_normal();
    }
}

}  // namespace

void FactorModel::validate() const {
    if (u < 1) throw ModelError("u must be positive");
    if (!(a_prime >= 0)) throw ModelError("a_prime must be non-negative");
    if (!(sigma_a_sq >= 0)) throw ModelError("sigma_a_sq must be non-negative");
    if (!(cov_a >= 0)) throw ModelError("cov_a must be non-negative");
    if (cov_a > sigma_a_sq) throw ModelError("cov_a must not exceed sigma_a_sq");
}

std::vector<double> sample_allocations(const FactorModel& model, SplitMix64& rng) {
    model.validate();
    std::vector<double> values(model.u);
    sample_into(model, rng, values);
    return values;
}

McEstimate mc_variance_of_load(const FactorModel& model, long long n_samples,
                               std::uint64_t seed) {
    model.validate();
    if (n_samples < 2) {
        throw InputError("mc_variance_of_load: at least 2 samples required");
    }
    std::vector<double> buffer(model.u);
    double mean = 0;
    double m2 = 0;
    for (long long r = 0; r < n_samples; ++r) {
        SplitMix64 rng(replication_seed(seed, static_cast<std::uint64_t>(r)));
        sample_into(model, rng, buffer);
        double load = 0;
        for (double a : buffer) load += a;
        const double delta = load - mean;
        mean += delta / static_cast<double>(r + 1);
        m2 += delta * (load - mean);
    }
    McEstimate est;
    est.mean = mean;
    est.variance = m2 / static_cast<double>(n_samples - 1);
    // Gaussian replications: SE of the sample variance is s^2 sqrt(2/(n-1))
    est.std_error = est.variance * std::sqrt(2.0 / static_cast<double>(n_samples - 1));
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

McEstimate mc_sla_probability(const FactorModel& model, long long n_samples,
                              std::uint64_t seed) {
    model.validate();
    if (n_samples < 1) {
        throw InputError("mc_sla_probability: at least 1 sample required");
    }
    std::vector<double> buffer(model.u);
    long long within_budget = 0;
    for (long long r = 0; r < n_samples; ++r) {
        SplitMix64 rng(replication_seed(seed, static_cast<std::uint64_t>(r)));
        sample_into(model, rng, buffer);
        double load = 0;
        for (double a : buffer) load += a;
        if (load <= 1.0) ++within_budget;
    }
    McEstimate est;
    est.mean = static_cast<double>(within_budget) / static_cast<double>(n_samples);
    est.variance = est.mean * (1.0 - est.mean);
    est.std_error = std::sqrt(est.variance / static_cast<double>(n_samples));
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

}  // namespace sliceweaver

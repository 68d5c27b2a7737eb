#pragma once

#include <span>
#include <vector>

namespace sliceweaver {

struct AllocationModelParams {
    double f_d = 1.0;              // utility scale
    double beta = 0.0;             // utility convergence constant
    double delta_t = 1.0;          // time window, seconds
    double sigma_s_sq = 1.0;       // SNR fading scale
    double cell_throughput = 1.0;  // cell throughput c(t)

    void validate() const;
};

/// Per-service state: resource share and signal-to-noise ratio.
struct ServiceState {
    double resource = 0;
    double snr = 0;
};

/// Whether the arrival-rate sum weights each service by its index.
/// IndexWeighted is the primary form; Unweighted is kept for sensitivity.
enum class RateWeighting { IndexWeighted, Unweighted };

struct ObjectiveEval {
    double value = 0;
    double rayleigh = 0;
    std::vector<double> conditional_terms;  // one per n = 2..U
};

struct ResourceRange {
    double lo = 0;
    double hi = 0;
};

struct ResourceEstimate {
    double resource = 0;
    double objective = 0;
    double s_derivative = 0;  // finite-difference diagnostic at the optimum
};

/// Utility throughput f_d exp(beta r s) / delta_t.
double throughput(const AllocationModelParams& p, double r_i, double s_i);

/// First-user SNR density (1/sigma^2) exp(-x/sigma^2).
double rayleigh_term(double sigma_s_sq, double x);

/// exp(-lambda) lambda^n / n!, evaluated in log space for large n or lambda.
double poisson_pmf(double lambda, int n);

/// Arrival rate over the first n states:
/// (f_d / delta_t) sum_i w_i exp(beta r_i s_i) / c(t), w_i = i or 1.
double lambda_weighted(const AllocationModelParams& p,
                       std::span<const ServiceState> states, int n,
                       RateWeighting weighting = RateWeighting::IndexWeighted);

/// Closed form of pmf(lambda1, n) / pmf(lambda2, n-1):
/// exp(-(l1 - l2)) l1^n / (l2^(n-1) n), evaluated in log space.
double conditional_prob_from_rates(double lambda1, double lambda2, int n);

double conditional_prob(const AllocationModelParams& p,
                        std::span<const ServiceState> states, int n,
                        RateWeighting weighting = RateWeighting::IndexWeighted);

/// First-user density plus the chain of conditional service terms.
ObjectiveEval total_probability(const AllocationModelParams& p,
                                std::span<const ServiceState> states, double x);

/// Resource share for an incoming service with SNR new_snr: appends a
/// candidate state and maximizes the objective over r via a 1024-point grid
/// plus golden-section refinement. Among candidates within 1e-9 of the
/// maximum, the one whose finite-difference SNR derivative is closest to
/// zero wins; exact ties resolve to the lowest r, so a flat objective
/// returns r_range.lo. An empty state list is allowed: the objective then
/// reduces to the first-user density and is flat in r.
ResourceEstimate estimate_resource(const AllocationModelParams& p,
                                   std::span<const ServiceState> states,
                                   double new_snr, ResourceRange r_range);

}  // namespace sliceweaver

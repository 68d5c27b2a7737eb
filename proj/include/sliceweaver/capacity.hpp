#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sliceweaver {

/// Moment bounds on relative allocations plus the slice resource budget.
struct BoundParams {
    double a = 0;           // mean relative allocation E[A_i]
    double a_prime = 0;     // conditional-mean bound
    double sigma_a_sq = 0;  // conditional-variance bound
    double cov_a = 0;       // conditional-covariance bound
    double g = 1.5;         // headroom constant, > 1
    double r_max = 0;       // total resource budget

    /// Mean absolute allocation E[R_i] = a * r_max.
    double mean_allocation() const { return a * r_max; }

    void validate() const;
};

/// Weight applied to the covariance contribution of the variance bound.
/// Full is the final printed form; Quarter is kept for sensitivity runs.
enum class CovTermWeight { Full, Quarter };

struct VarianceBreakdown {
    double term_sigma = 0;
    double term_cov = 0;
    double term_mean = 0;  // covariance between constant moments: always 0
    double total = 0;
    double u_effective = 0;  // g / a
};

struct CategoryCapacity {
    int category = 0;
    long long admitted = 0;
};

/// Most services one category can host: floor(min(g r_max / r, g / a)).
long long service_cap(const BoundParams& p);

/// Upper bound on the variance of the relative slice load.
VarianceBreakdown variance_bound(const BoundParams& p,
                                 CovTermWeight weight = CovTermWeight::Full);

/// One-sided concentration lower bound on P[load <= 1]. Zero once the mean
/// load reaches the budget; clamped to [0, 1].
double sla_lower_bound(const BoundParams& p, double mean_load,
                       CovTermWeight weight = CovTermWeight::Full);

/// Moment schedules as functions of the mean allocation a.
struct LimitSchedule {
    std::function<double(double)> sigma_a_sq;  // a  -> variance bound
    std::function<double(double)> a_prime;     // a  -> conditional-mean bound
    std::function<double(double)> cov_a;       // a' -> covariance bound
};

struct LimitOptions {
    double g = 1.5;
    double epsilon = 1e-6;  // final-value threshold for the verdict
};

/// Vanishing-variance diagnostics along a descending grid of a values.
/// Verdict: every term series is non-increasing over the grid tail (last
/// half) and ends below epsilon.
struct LimitSeries {
    std::vector<double> term_sigma;
    std::vector<double> term_cov;
    std::vector<double> term_mean;
    bool verdict = false;
};

LimitSeries limit_conditions(const LimitSchedule& schedule,
                             std::span<const double> a_grid,
                             const LimitOptions& options = {});

long long slice_capacity_sum(std::span<const CategoryCapacity> categories);

}  // namespace sliceweaver

#include "sliceweaver/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

VarianceBreakdown breakdown_at(double sigma_a_sq, double cov_a, double u_effective,
                               CovTermWeight weight) {
    VarianceBreakdown b;
    b.u_effective = u_effective;
    b.term_sigma = 0.5 * sigma_a_sq * (u_effective * u_effective + u_effective);
    const double u_sq = u_effective * u_effective;
    const double cov_weight = weight == CovTermWeight::Quarter ? 0.25 : 1.0;
    b.term_cov = cov_weight * cov_a * (u_sq * u_sq - u_sq);
    b.term_mean = 0.0;
    b.total = b.term_sigma + b.term_cov + b.term_mean;
    return b;
}

bool tail_vanishes(const std::vector<double>& series, double epsilon) {
    const std::size_t n = series.size();
    for (std::size_t i = n / 2 + 1; i < n; ++i) {
        // tolerate last-ulp noise in otherwise flat series
        const double slack = 1e-12 * std::max(1.0, std::abs(series[i - 1]));
        if (series[i] > series[i - 1] + slack) return false;
    }
    return series.back() < epsilon;
}

}  // namespace

void BoundParams::validate() const {
    if (!(a > 0)) throw ValidationError("a must be positive");
    if (!(a_prime >= a)) throw ValidationError("a_prime must be at least a");
    if (!(a_prime <= 1)) throw ValidationError("a_prime must not exceed 1");
    if (!(sigma_a_sq >= 0)) throw ValidationError("sigma_a_sq must be non-negative");
    if (!(cov_a >= 0)) throw ValidationError("cov_a must be non-negative");
    if (!(g > 1)) throw ValidationError("g must exceed 1");
    if (!(r_max > 0)) throw ValidationError("r_max must be positive");
}

long long service_cap(const BoundParams& p) {
    if (!(p.a > 0)) {
        throw InputError("service_cap: capacity is unbounded at a = 0");
    }
    if (!(p.r_max > 0)) throw InputError("service_cap: r_max must be positive");
    const double by_budget = p.g * p.r_max / p.mean_allocation();
    const double by_share = p.g / p.a;
    // fmin drops the NaN produced by an infinite-budget sentinel
    const double cap = std::fmin(by_budget, by_share);
    if (!(cap < 9.0e18)) {
        throw CapacityError("service_cap: cap exceeds representable count");
    }
    // absorb 1-ulp division noise at integer-valued caps
    return static_cast<long long>(std::floor(cap + 1e-9));
}

VarianceBreakdown variance_bound(const BoundParams& p, CovTermWeight weight) {
    if (!(p.a > 0)) throw InputError("variance_bound: a must be positive");
    return breakdown_at(p.sigma_a_sq, p.cov_a, p.g / p.a, weight);
}

double sla_lower_bound(const BoundParams& p, double mean_load, CovTermWeight weight) {
    if (!(mean_load >= 0)) {
        throw InputError("sla_lower_bound: mean_load must be non-negative");
    }
    if (mean_load >= 1.0) return 0.0;
    const double variance = variance_bound(p, weight).total;
    const double slack = 1.0 - mean_load;
    const double bound = 1.0 - variance / (variance + slack * slack);
    return std::clamp(bound, 0.0, 1.0);
}

LimitSeries limit_conditions(const LimitSchedule& schedule,
                             std::span<const double> a_grid,
                             const LimitOptions& options) {
    if (a_grid.empty()) throw InputError("limit_conditions: empty grid");
    if (!schedule.sigma_a_sq || !schedule.a_prime || !schedule.cov_a) {
        throw InputError("limit_conditions: schedule is incomplete");
    }
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
        if (!(a_grid[i] > 0)) {
            throw InputError("limit_conditions: grid values must be positive");
        }
        if (i > 0 && !(a_grid[i] < a_grid[i - 1])) {
            throw InputError("limit_conditions: grid must be strictly decreasing");
        }
    }

    LimitSeries series;
    series.term_sigma.reserve(a_grid.size());
    series.term_cov.reserve(a_grid.size());
    series.term_mean.reserve(a_grid.size());
    for (double a : a_grid) {
        const double a_prime = schedule.a_prime(a);
        const auto b = breakdown_at(schedule.sigma_a_sq(a), schedule.cov_a(a_prime),
                                    options.g / a, CovTermWeight::Full);
        series.term_sigma.push_back(b.term_sigma);
        series.term_cov.push_back(b.term_cov);
        series.term_mean.push_back(b.term_mean);
    }
    series.verdict = tail_vanishes(series.term_sigma, options.epsilon) &&
                     tail_vanishes(series.term_cov, options.epsilon) &&
                     tail_vanishes(series.term_mean, options.epsilon);
    return series;
}

long long slice_capacity_sum(std::span<const CategoryCapacity> categories) {
    long long total = 0;
    for (const CategoryCapacity& c : categories) total += c.admitted;
    return total;
}

}  // namespace sliceweaver

#include "sliceweaver/allocation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "sliceweaver/errors.hpp"

namespace sliceweaver {

namespace {

constexpr double kMaxExponent = 709.0;  // exp() overflows just above this
constexpr int kGridPoints = 1024;
constexpr double kRefineRelTol = 1e-6;
constexpr double kNearMaxWindow = 1e-9;
constexpr double kGoldenRatio = 0.6180339887498949;

double guarded_exp(double exponent) {
    if (!(exponent <= kMaxExponent)) {
        throw NumericError("exponent out of range: exp(" + std::to_string(exponent) +
                           ")");
    }
    return std::exp(exponent);
}

const std::array<double, 21>& factorial_table() {
    static const std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            t[i] = t[i - 1] * static_cast<double>(i);
        }
        return t;
    }();
    return table;
}

void validate_states(std::span<const ServiceState> states) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!std::isfinite(states[i].resource) || states[i].resource < 0) {
            throw InputError("state " + std::to_string(i) +
                             ": resource must be finite and non-negative");
        }
        if (!std::isfinite(states[i].snr) || states[i].snr < 0) {
            throw InputError("state " + std::to_string(i) +
                             ": snr must be finite and non-negative");
        }
    }
}

}  // namespace

void AllocationModelParams::validate() const {
    if (!(f_d > 0)) throw ValidationError("f_d must be positive");
    if (!std::isfinite(beta)) throw ValidationError("beta must be finite");
    if (!(delta_t > 0)) throw ValidationError("delta_t must be positive");
    if (!(sigma_s_sq > 0)) throw ValidationError("sigma_s_sq must be positive");
    if (!(cell_throughput > 0)) {
        throw ValidationError("cell_throughput must be positive");
    }
}

double throughput(const AllocationModelParams& p, double r_i, double s_i) {
    p.validate();
    if (!std::isfinite(r_i) || !std::isfinite(s_i)) {
        throw InputError("throughput: inputs must be finite");
    }
    return p.f_d * guarded_exp(p.beta * r_i * s_i) / p.delta_t;
}

double rayleigh_term(double sigma_s_sq, double x) {
    if (!(sigma_s_sq > 0)) throw InputError("rayleigh_term: sigma_s_sq must be positive");
    if (!(x >= 0)) throw InputError("rayleigh_term: x must be non-negative");
    return std::exp(-x / sigma_s_sq) / sigma_s_sq;
}

double poisson_pmf(double lambda, int n) {
    if (!(lambda >= 0)) throw InputError("poisson_pmf: lambda must be non-negative");
    if (n < 0) throw InputError("poisson_pmf: n must be non-negative");
    if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n <= 20 && lambda <= 700.0) {
        double power = 1.0;
        for (int i = 0; i < n; ++i) power *= lambda;
        return std::exp(-lambda) * power / factorial_table()[static_cast<std::size_t>(n)];
    }
    return std::exp(-lambda + n * std::log(lambda) - std::lgamma(n + 1.0));
}

double lambda_weighted(const AllocationModelParams& p,
                       std::span<const ServiceState> states, int n,
                       RateWeighting weighting) {
    p.validate();
    if (n < 1 || static_cast<std::size_t>(n) > states.size()) {
        throw InputError("lambda_weighted: n out of range");
    }
    validate_states(states.subspan(0, static_cast<std::size_t>(n)));
    double sum = 0;
    for (int i = 1; i <= n; ++i) {
        const ServiceState& s = states[static_cast<std::size_t>(i - 1)];
        const double weight = weighting == RateWeighting::IndexWeighted ? i : 1.0;
        sum += weight * guarded_exp(p.beta * s.resource * s.snr);
    }
    return p.f_d / p.delta_t * sum / p.cell_throughput;
}

double conditional_prob_from_rates(double lambda1, double lambda2, int n) {
    if (n < 2) throw InputError("conditional_prob: n must be at least 2");
    if (!(lambda1 >= 0)) throw InputError("conditional_prob: lambda1 must be non-negative");
    if (!(lambda2 > 0)) {
        throw NumericError("conditional_prob: degenerate conditioning (lambda2 = 0)");
    }
    if (lambda1 == 0.0) return 0.0;
    const double log_value = -(lambda1 - lambda2) + n * std::log(lambda1) -
                             (n - 1) * std::log(lambda2) - std::log(static_cast<double>(n));
    if (!(log_value <= kMaxExponent)) {
        throw NumericError("conditional_prob: value overflows");
    }
    return std::exp(log_value);
}

double conditional_prob(const AllocationModelParams& p,
                        std::span<const ServiceState> states, int n,
                        RateWeighting weighting) {
    if (n < 2) throw InputError("conditional_prob: n must be at least 2");
    const double lambda1 = lambda_weighted(p, states, n, weighting);
    const double lambda2 = lambda_weighted(p, states, n - 1, weighting);
    return conditional_prob_from_rates(lambda1, lambda2, n);
}

ObjectiveEval total_probability(const AllocationModelParams& p,
                                std::span<const ServiceState> states, double x) {
    if (states.empty()) throw InputError("total_probability: at least one state required");
    p.validate();
    validate_states(states);
    ObjectiveEval eval;
    eval.rayleigh = rayleigh_term(p.sigma_s_sq, x);
    eval.value = eval.rayleigh;
    const int count = static_cast<int>(states.size());
    eval.conditional_terms.reserve(static_cast<std::size_t>(std::max(0, count - 1)));
    for (int n = 2; n <= count; ++n) {
        const double term = conditional_prob(p, states, n);
        eval.conditional_terms.push_back(term);
        eval.value += term;
    }
    return eval;
}

ResourceEstimate estimate_resource(const AllocationModelParams& p,
                                   std::span<const ServiceState> states,
                                   double new_snr, ResourceRange r_range) {
    p.validate();
    validate_states(states);
    if (!std::isfinite(r_range.lo) || !std::isfinite(r_range.hi) ||
        !(r_range.lo <= r_range.hi)) {
        throw InputError("estimate_resource: empty or invalid resource range");
    }
    if (!(r_range.lo >= 0)) {
        throw InputError("estimate_resource: resource range must be non-negative");
    }
    if (!std::isfinite(new_snr) || !(new_snr >= 0)) {
        throw InputError("estimate_resource: new_snr must be finite and non-negative");
    }

    std::vector<ServiceState> working(states.begin(), states.end());
    working.push_back({r_range.lo, new_snr});

    auto objective_at = [&](double r) {
        working.back() = {r, new_snr};
        const double value = total_probability(p, working, new_snr).value;
        if (!std::isfinite(value)) {
            throw NumericError("estimate_resource: non-finite objective at r = " +
                               std::to_string(r));
        }
        return value;
    };

    // Derivative of the objective with respect to the incoming SNR; the
    // candidate's snr and the density argument move together.
    auto snr_derivative_at = [&](double r) {
        const double step = 1e-5 * std::max(1.0, new_snr);
        auto value_at_snr = [&](double snr) {
            working.back() = {r, snr};
            return total_probability(p, working, snr).value;
        };
        if (new_snr >= step) {
            const double hi = value_at_snr(new_snr + step);
            const double lo = value_at_snr(new_snr - step);
            return (hi - lo) / (2.0 * step);
        }
        // one-sided when the SNR sits against zero
        const double hi = value_at_snr(new_snr + step);
        const double at = value_at_snr(new_snr);
        return (hi - at) / step;
    };

    struct Candidate {
        double r;
        double value;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(kGridPoints + 64);

    const double span = r_range.hi - r_range.lo;
    if (span == 0.0) {
        const double value = objective_at(r_range.lo);
        return {r_range.lo, value, snr_derivative_at(r_range.lo)};
    }

    int best_index = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < kGridPoints; ++j) {
        const double r = r_range.lo + span * j / (kGridPoints - 1);
        const double value = objective_at(r);
        candidates.push_back({r, value});
        if (value > best_value) {
            best_value = value;
            best_index = j;
        }
    }

    // Golden-section refinement inside the bracket around the best grid point.
    double lo_b = candidates[static_cast<std::size_t>(std::max(0, best_index - 1))].r;
    double hi_b =
        candidates[static_cast<std::size_t>(std::min(kGridPoints - 1, best_index + 1))].r;
    double x1 = hi_b - kGoldenRatio * (hi_b - lo_b);
    double x2 = lo_b + kGoldenRatio * (hi_b - lo_b);
    double f1 = objective_at(x1);
    double f2 = objective_at(x2);
    candidates.push_back({x1, f1});
    candidates.push_back({x2, f2});
    while (hi_b - lo_b > kRefineRelTol * span) {
        if (f1 < f2) {
            lo_b = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo_b + kGoldenRatio * (hi_b - lo_b);
            f2 = objective_at(x2);
            candidates.push_back({x2, f2});
        } else {
            hi_b = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi_b - kGoldenRatio * (hi_b - lo_b);
            f1 = objective_at(x1);
            candidates.push_back({x1, f1});
        }
    }

    double max_value = -std::numeric_limits<double>::infinity();
    for (const Candidate& c : candidates) max_value = std::max(max_value, c.value);

    // Stationarity filter among near-maximal candidates.
    const Candidate* chosen = nullptr;
    double chosen_deriv = 0;
    for (const Candidate& c : candidates) {
        if (max_value - c.value > kNearMaxWindow) continue;
        const double deriv = snr_derivative_at(c.r);
        const bool better =
            chosen == nullptr || std::abs(deriv) < std::abs(chosen_deriv) ||
            (std::abs(deriv) == std::abs(chosen_deriv) && c.r < chosen->r);
        if (better) {
            chosen = &c;
            chosen_deriv = deriv;
        }
    }
    return {chosen->r, chosen->value, chosen_deriv};
}

}  // namespace sliceweaver

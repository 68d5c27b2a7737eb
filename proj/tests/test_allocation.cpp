#include <cmath>
#include <vector>

#include "doctest.h"
#include "sliceweaver/allocation.hpp"
#include "sliceweaver/errors.hpp"
#include "sliceweaver/oracles.hpp"
#include "sliceweaver/rng.hpp"

using namespace sliceweaver;

namespace {

AllocationModelParams make_params(double f_d, double beta, double delta_t,
                                  double sigma_s_sq, double cell_throughput) {
    AllocationModelParams p;
    p.f_d = f_d;
    p.beta = beta;
    p.delta_t = delta_t;
    p.sigma_s_sq = sigma_s_sq;
    p.cell_throughput = cell_throughput;
    return p;
}

}  // namespace

TEST_CASE("throughput") {
    CHECK(throughput(make_params(1, 0, 1, 1, 1), 3.0, 4.0) == 1.0);
    CHECK(throughput(make_params(1, 0.1, 1, 1, 1), 10.0, 2.0) ==
          doctest::Approx(7.389056098930650).epsilon(1e-9));
    CHECK_THROWS_AS(throughput(make_params(1, 0.1, 0, 1, 1), 1, 1), ValidationError);
    CHECK_THROWS_AS(throughput(make_params(1, 1.0, 1, 1, 1), 1000.0, 1.0), NumericError);

    SUBCASE("monotone in resource and snr when beta > 0") {
        const AllocationModelParams p = make_params(1, 0.2, 1, 1, 1);
        double previous = 0;
        for (double r : {0.0, 1.0, 2.0, 5.0}) {
            const double value = throughput(p, r, 1.5);
            CHECK(value > previous);
            previous = value;
        }
        CHECK(throughput(p, 2.0, 1.0) < throughput(p, 2.0, 2.0));
    }
}

TEST_CASE("rayleigh_term") {
    CHECK(rayleigh_term(1.0, 0.0) == 1.0);
    CHECK(rayleigh_term(1.0, 1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
    CHECK(rayleigh_term(2.0, 0.0) == 0.5);
    CHECK_THROWS_AS(rayleigh_term(1.0, -0.5), InputError);
    CHECK_THROWS_AS(rayleigh_term(0.0, 0.5), InputError);
}

TEST_CASE("poisson_pmf") {
    CHECK(poisson_pmf(1.0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(poisson_pmf(2.0, 2) == doctest::Approx(0.2706705664732254).epsilon(1e-12));
    CHECK(poisson_pmf(0.0, 0) == 1.0);
    CHECK(poisson_pmf(0.0, 3) == 0.0);
    CHECK_THROWS_AS(poisson_pmf(-1.0, 0), InputError);
    CHECK_THROWS_AS(poisson_pmf(1.0, -1), InputError);

    SUBCASE("direct and log-space branches agree through the recurrence") {
        // pmf(lambda, n) = pmf(lambda, n-1) * lambda / n across the n = 20 switch
        for (double lambda : {0.5, 3.0, 12.0}) {
            for (int n = 19; n <= 24; ++n) {
                const double expected = poisson_pmf(lambda, n - 1) * lambda / n;
                CHECK(poisson_pmf(lambda, n) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("lambda_weighted") {
    const std::vector<ServiceState> one{{5.0, 1.0}};
    CHECK(lambda_weighted(make_params(1, 0, 1, 1, 2), one, 1) == doctest::Approx(0.5));

    const std::vector<ServiceState> two{{5.0, 1.0}, {5.0, 1.0}};
    CHECK(lambda_weighted(make_params(1, 0, 1, 1, 3), two, 2) == doctest::Approx(1.0));
    CHECK(lambda_weighted(make_params(1, 0, 1, 1, 3), two, 2, RateWeighting::Unweighted) ==
          doctest::Approx(2.0 / 3.0));

    CHECK_THROWS_AS(lambda_weighted(make_params(1, 0, 1, 1, 3), two, 0), InputError);
    CHECK_THROWS_AS(lambda_weighted(make_params(1, 0, 1, 1, 3), two, 3), InputError);
    CHECK_THROWS_AS(lambda_weighted(make_params(1, 0, 1, 1, 0), two, 2), ValidationError);
}

TEST_CASE("conditional_prob_from_rates") {
    CHECK(conditional_prob_from_rates(0.7, 0.7, 3) == doctest::Approx(0.7 / 3).epsilon(1e-14));
    CHECK(conditional_prob_from_rates(0.0, 0.5, 2) == 0.0);
    CHECK_THROWS_AS(conditional_prob_from_rates(1.0, 1.0, 1), InputError);
    CHECK_THROWS_AS(conditional_prob_from_rates(1.0, 0.0, 2), NumericError);
}

TEST_CASE("conditional_prob") {
    const AllocationModelParams p = make_params(1, 0, 1, 1, 3);
    const std::vector<ServiceState> two{{5.0, 1.0}, {5.0, 1.0}};
    // lambda1 = 1, lambda2 = 1/3: exp(-2/3) * 1 / ((1/3) * 2)
    CHECK(conditional_prob(p, two, 2) ==
          doctest::Approx(1.5 * std::exp(-2.0 / 3.0)).epsilon(1e-12));

    SUBCASE("matches the direct pmf ratio on randomized inputs") {
        SplitMix64 gen(0xA110CULL);
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const int n_states = 2 + static_cast<int>(gen.next() % 5);
            const int n =
                2 + static_cast<int>(gen.next() % static_cast<std::uint64_t>(n_states - 1));
            const AllocationModelParams params =
                make_params(0.5 + 1.5 * gen.next_unit(), 0.2 * gen.next_unit(),
                            0.5 + 1.5 * gen.next_unit(), 1.0, 5.0 + 45.0 * gen.next_unit());
            std::vector<ServiceState> states;
            for (int s = 0; s < n_states; ++s) {
                states.push_back({5.0 * gen.next_unit(), 2.0 * gen.next_unit()});
            }
            const double direct = conditional_prob(params, states, n);
            const double lambda1 = lambda_weighted(params, states, n);
            const double lambda2 = lambda_weighted(params, states, n - 1);
            const double ratio = poisson_pmf(lambda1, n) / poisson_pmf(lambda2, n - 1);
            worst = std::max(worst, std::abs(direct - ratio) / std::abs(ratio));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("total_probability") {
    const AllocationModelParams p = make_params(1, 0.1, 1, 2, 10);
    SUBCASE("single service reduces to the density term") {
        const std::vector<ServiceState> one{{3.0, 1.0}};
        const ObjectiveEval eval = total_probability(p, one, 0.8);
        CHECK(eval.conditional_terms.empty());
        CHECK(eval.value == eval.rayleigh);
        CHECK(eval.rayleigh == doctest::Approx(rayleigh_term(2.0, 0.8)).epsilon(1e-14));
    }
    SUBCASE("value decomposes into the reported terms") {
        const std::vector<ServiceState> states{{3.0, 1.0}, {2.0, 0.5}, {4.0, 1.5}};
        const ObjectiveEval eval = total_probability(p, states, 0.8);
        REQUIRE(eval.conditional_terms.size() == 2);
        double sum = eval.rayleigh;
        for (std::size_t n = 2; n <= 3; ++n) {
            const double term = conditional_prob(p, states, static_cast<int>(n));
            CHECK(term == eval.conditional_terms[n - 2]);
            CHECK(term >= 0);
            sum += term;
        }
        CHECK(eval.value == doctest::Approx(sum).epsilon(1e-14));
    }
    SUBCASE("errors propagate") {
        CHECK_THROWS_AS(total_probability(p, {}, 0.8), InputError);
        const std::vector<ServiceState> one{{3.0, 1.0}};
        CHECK_THROWS_AS(total_probability(p, one, -0.1), InputError);
    }
}

TEST_CASE("estimate_resource") {
    SUBCASE("flat objective resolves to the low end") {
        const AllocationModelParams p = make_params(1, 0, 1, 1, 10);
        const std::vector<ServiceState> states{{3.0, 1.0}, {2.0, 0.5}};
        const ResourceEstimate est = estimate_resource(p, states, 1.0, {2.0, 9.0});
        CHECK(est.resource == 2.0);
    }
    SUBCASE("point range") {
        const AllocationModelParams p = make_params(1, 0.1, 1, 1, 10);
        const std::vector<ServiceState> states{{3.0, 1.0}};
        const ResourceEstimate est = estimate_resource(p, states, 1.0, {4.0, 4.0});
        CHECK(est.resource == 4.0);
    }
    SUBCASE("empty state list reduces to the flat density objective") {
        const AllocationModelParams p = make_params(1, 0.3, 1, 1, 10);
        const ResourceEstimate est = estimate_resource(p, {}, 1.0, {1.0, 6.0});
        CHECK(est.resource == 1.0);
        CHECK(est.objective == doctest::Approx(rayleigh_term(1.0, 1.0)).epsilon(1e-14));
    }
    SUBCASE("invalid inputs") {
        const AllocationModelParams p = make_params(1, 0.1, 1, 1, 10);
        const std::vector<ServiceState> states{{3.0, 1.0}};
        CHECK_THROWS_AS(estimate_resource(p, states, 1.0, {5.0, 4.0}), InputError);
        CHECK_THROWS_AS(estimate_resource(p, states, -1.0, {0.0, 4.0}), InputError);
    }
    SUBCASE("overflowing objective reports a numeric error") {
        const AllocationModelParams p = make_params(1, 100.0, 1, 1, 10);
        const std::vector<ServiceState> states{{3.0, 1.0}};
        CHECK_THROWS_AS(estimate_resource(p, states, 10.0, {0.0, 10.0}), NumericError);
    }
    SUBCASE("monotone regime matches the dense-grid oracle") {
        const AllocationModelParams p = make_params(1, 0.12, 1, 1, 40.0);
        const std::vector<ServiceState> states{{1.0, 0.8}, {0.5, 1.2}};
        const double snr = 1.5;
        const ResourceRange range{0.0, 12.0};
        auto objective = [&](double r) {
            std::vector<ServiceState> working(states);
            working.push_back({r, snr});
            return total_probability(p, working, snr).value;
        };
        const GridArgmax oracle = dense_grid_argmax(objective, range.lo, range.hi, 10000);
        const ResourceEstimate est = estimate_resource(p, states, snr, range);
        CHECK(std::abs(est.resource - oracle.x) <= 1e-4 * (range.hi - range.lo));
        CHECK(std::abs(est.objective - oracle.value) <= 1e-9);
        CHECK(est.objective == doctest::Approx(objective(est.resource)).epsilon(1e-14));
    }
    SUBCASE("interior maximum matches the dense-grid oracle") {
        // lambda crosses the Poisson mode inside the range
        const AllocationModelParams p = make_params(1, 0.5, 1, 1, 3.0);
        const std::vector<ServiceState> states{{0.0, 0.0}};
        const double snr = 1.0;
        const ResourceRange range{0.0, 5.0};
        auto objective = [&](double r) {
            std::vector<ServiceState> working(states);
            working.push_back({r, snr});
            return total_probability(p, working, snr).value;
        };
        const GridArgmax oracle = dense_grid_argmax(objective, range.lo, range.hi, 100000);
        const ResourceEstimate est = estimate_resource(p, states, snr, range);
        CHECK(oracle.x > range.lo + 0.1);  // genuinely interior
        CHECK(oracle.x < range.hi - 0.1);
        CHECK(std::abs(est.resource - oracle.x) <= 1e-4 * (range.hi - range.lo));
        CHECK(std::abs(est.objective - oracle.value) <= 2e-9);
    }
}

// Acceptance suite: one pass/fail line per criterion, with the measured
// values and elapsed time. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "sliceweaver/allocation.hpp"
#include "sliceweaver/capacity.hpp"
#include "sliceweaver/graph.hpp"
#include "sliceweaver/oracles.hpp"
#include "sliceweaver/report.hpp"
#include "sliceweaver/rng.hpp"
#include "sliceweaver/simulator.hpp"
#include "sliceweaver/stochastic.hpp"

using namespace sliceweaver;

namespace {

constexpr std::uint64_t kSeed = 0xACCE97A4CEULL;

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no stated limit
};

std::string fmt(double value) { return format_number(value); }

struct GridPoint {
    double a;
    double sigma_a_sq;
    double cov_a;
};

std::vector<GridPoint> moment_grid() {
    std::vector<GridPoint> grid;
    for (double a : {0.1, 0.25, 0.5}) {
        for (double sigma : {0.0, 0.005, 0.02}) {
            for (double fraction : {0.0, 0.5, 1.0}) {
                grid.push_back({a, sigma, sigma * fraction});
            }
        }
    }
    return grid;
}

BoundParams grid_bound_params(const GridPoint& point) {
    BoundParams p;
    p.a = point.a;
    p.a_prime = 2.0 * point.a;
    p.sigma_a_sq = point.sigma_a_sq;
    p.cov_a = point.cov_a;
    p.g = 1.5;
    p.r_max = 1.0;
    return p;
}

Criterion chromatic_poly_vs_enumeration() {
    Criterion c{1, "chromatic polynomial vs enumeration (u<=8, k<=5)", true, "", 0, 10};
    int cases = 0;
    std::int64_t max_diff = 0;
    for (int u = 0; u <= 8; ++u) {
        const DependencyGraph g = build_dependency_graph(u);
        for (int k = 0; k <= 5; ++k) {
            const std::int64_t diff =
                std::llabs(chromatic_poly_complete(u, k) - count_proper_colorings(g, k));
            max_diff = std::max(max_diff, diff);
            ++cases;
        }
    }
    c.pass = max_diff == 0;
    c.detail = "cases=" + std::to_string(cases) + " max_abs_diff=" + std::to_string(max_diff);
    return c;
}

Criterion greedy_optimality() {
    Criterion c{2, "greedy coloring optimal on cliques (u<=10)", true, "", 0, 30};
    for (int u = 1; u <= 10; ++u) {
        const DependencyGraph g = build_dependency_graph(u);
        const int greedy = greedy_color(g).colors_used;
        const int brute = chromatic_number_brute(g);
        if (greedy != u || brute != u) {
            c.pass = false;
            c.detail = "mismatch at u=" + std::to_string(u);
            return c;
        }
    }
    c.detail = "greedy == chromatic number == u for u=1..10";
    return c;
}

Criterion perfectness() {
    Criterion c{3, "complete graphs perfect, five-cycle control rejected", true, "", 0, 20};
    for (int u = 1; u <= 8; ++u) {
        if (!is_perfect_brute(build_dependency_graph(u))) {
            c.pass = false;
            c.detail = "K_" + std::to_string(u) + " not perfect";
            return c;
        }
    }
    DependencyGraph cycle(5);
    for (int v = 0; v < 5; ++v) cycle.add_edge(v, (v + 1) % 5);
    const bool control = !is_perfect_brute(cycle);
    c.pass = control;
    c.detail = std::string("u=1..8 perfect, five-cycle rejected=") + (control ? "yes" : "no");
    return c;
}

Criterion layered_partite_count() {
    Criterion c{4, "layered partite polynomial vs enumeration (n<=6, k<=5)", true, "", 0, 0};
    int cases = 0;
    std::int64_t max_diff = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const std::int64_t diff = std::llabs(chromatic_poly_layered_partite(n, k) -
                                                 count_path_block_colorings(n, k));
            max_diff = std::max(max_diff, diff);
            ++cases;
        }
    }
    c.pass = max_diff == 0;
    c.detail = "cases=" + std::to_string(cases) + " max_abs_diff=" + std::to_string(max_diff);
    return c;
}

Criterion variance_dominance() {
    Criterion c{5, "variance bound dominates Monte Carlo (27 points, 1e5 samples)", true,
                "", 0, 60};
    double worst_margin = 1e300;
    for (const GridPoint& point : moment_grid()) {
        const BoundParams p = grid_bound_params(point);
        FactorModel model;
        model.a_prime = p.a_prime;
        model.sigma_a_sq = point.sigma_a_sq;
        model.cov_a = point.cov_a;
        model.u = static_cast<int>(std::llround(p.g / p.a));
        const McEstimate est = mc_variance_of_load(model, 100000, kSeed);
        const double margin = variance_bound(p).total + 3.0 * est.std_error - est.variance;
        worst_margin = std::min(worst_margin, margin);
        if (margin < 0) c.pass = false;
    }
    c.detail = "worst_margin=" + fmt(worst_margin);
    return c;
}

Criterion vanishing_conditions() {
    Criterion c{6, "vanishing-variance conditions on the geometric grid", true, "", 0, 0};
    LimitSchedule schedule;
    schedule.sigma_a_sq = [](double a) { return a * a * a; };
    schedule.a_prime = [](double a) { return 2.0 * a; };
    schedule.cov_a = [](double ap) { return ap * ap * ap * ap * ap; };
    std::vector<double> grid;
    for (int j = 0; j <= 9; ++j) grid.push_back(0.5 * std::pow(2.0, -j));
    const LimitOptions options{0.25, 1e-3};
    const LimitSeries vanishing = limit_conditions(schedule, grid, options);

    LimitSchedule constant = schedule;
    constant.sigma_a_sq = [](double) { return 0.1; };
    const LimitSeries diverging = limit_conditions(constant, grid, options);

    const bool finals_small = vanishing.term_sigma.back() < 1e-3 &&
                              vanishing.term_cov.back() < 1e-3 &&
                              vanishing.term_mean.back() < 1e-3;
    c.pass = vanishing.verdict && finals_small && !diverging.verdict;
    c.detail = "final_sigma=" + fmt(vanishing.term_sigma.back()) +
               " final_cov=" + fmt(vanishing.term_cov.back()) +
               " constant_rejected=" + (diverging.verdict ? "no" : "yes");
    return c;
}

Criterion sla_consistency() {
    Criterion c{7, "SLA bound consistent with Monte Carlo (feasible grid points)", true,
                "", 0, 0};
    int evaluated = 0;
    double worst_margin = 1e300;
    for (const GridPoint& point : moment_grid()) {
        const BoundParams p = grid_bound_params(point);
        // largest service count whose mean load stays under budget
        int u = 0;
        while ((u + 1) * p.a_prime < 1.0) ++u;
        if (u < 1) continue;
        FactorModel model;
        model.a_prime = p.a_prime;
        model.sigma_a_sq = point.sigma_a_sq;
        model.cov_a = point.cov_a;
        model.u = u;
        const McEstimate est = mc_sla_probability(model, 100000, kSeed);
        const double bound = sla_lower_bound(p, u * p.a_prime);
        const double margin = est.mean - (bound - 3.0 * est.std_error);
        worst_margin = std::min(worst_margin, margin);
        if (margin < 0) c.pass = false;
        ++evaluated;
    }
    c.pass = c.pass && evaluated > 0;
    c.detail = "points=" + std::to_string(evaluated) + "/27 worst_margin=" +
               fmt(worst_margin);
    return c;
}

Criterion pmf_ratio_identity() {
    Criterion c{8, "conditional probability equals the pmf ratio (1e3 cases)", true, "",
                0, 0};
    SplitMix64 gen(kSeed ^ 0x90ABULL);
    double worst_rel = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n_states = 2 + static_cast<int>(gen.next() % 5);
        const int n =
            2 + static_cast<int>(gen.next() % static_cast<std::uint64_t>(n_states - 1));
        AllocationModelParams params;
        params.f_d = 0.5 + 1.5 * gen.next_unit();
        params.delta_t = 0.5 + 1.5 * gen.next_unit();
        params.beta = 0.2 * gen.next_unit();
        params.sigma_s_sq = 1.0;
        params.cell_throughput = 5.0 + 45.0 * gen.next_unit();
        std::vector<ServiceState> states;
        for (int s = 0; s < n_states; ++s) {
            states.push_back({5.0 * gen.next_unit(), 2.0 * gen.next_unit()});
        }
        const double direct = conditional_prob(params, states, n);
        const double lambda1 = lambda_weighted(params, states, n);
        const double lambda2 = lambda_weighted(params, states, n - 1);
        const double ratio = poisson_pmf(lambda1, n) / poisson_pmf(lambda2, n - 1);
        worst_rel = std::max(worst_rel, std::abs(direct - ratio) / std::abs(ratio));
    }
    c.pass = worst_rel <= 1e-12;
    c.detail = "worst_rel=" + fmt(worst_rel) + " tolerance=1e-12";
    return c;
}

struct EstimateScenario {
    AllocationModelParams params;
    std::vector<ServiceState> states;
    double new_snr = 0;
    ResourceRange range;
};

// Randomized optimizer scenario in the regime where the arrival rate stays
// below the Poisson mode over the whole range.
EstimateScenario make_estimate_scenario(SplitMix64& gen) {
    EstimateScenario sc;
    const int total = 1 + static_cast<int>(gen.next() % 5);
    sc.params.f_d = 0.5 + 1.5 * gen.next_unit();
    sc.params.delta_t = 0.5 + 1.5 * gen.next_unit();
    sc.params.sigma_s_sq = 0.5 + 1.5 * gen.next_unit();
    sc.params.beta = 0.08 + 0.12 * gen.next_unit();
    sc.new_snr = 1.2 + 1.8 * gen.next_unit();
    sc.range = {0.0, 10.0 + 10.0 * gen.next_unit()};
    for (int i = 0; i < total - 1; ++i) {
        sc.states.push_back({2.0 * gen.next_unit(), 0.2 + 1.3 * gen.next_unit()});
    }
    if (sc.params.beta * sc.range.hi * sc.new_snr < 2.0) {
        sc.params.beta = 2.2 / (sc.range.hi * sc.new_snr);
    }
    double weighted = 0;
    for (std::size_t i = 0; i < sc.states.size(); ++i) {
        weighted += static_cast<double>(i + 1) *
                    std::exp(sc.params.beta * sc.states[i].resource * sc.states[i].snr);
    }
    weighted += total * std::exp(sc.params.beta * sc.range.hi * sc.new_snr);
    sc.params.cell_throughput =
        sc.params.f_d / sc.params.delta_t * weighted / (0.8 * total);
    return sc;
}

Criterion optimizer_vs_oracle() {
    Criterion c{9, "resource estimator vs 1e5-point grid oracle (20 scenarios)", true,
                "", 0, 60};
    SplitMix64 gen(kSeed ^ 0xE571ULL);
    double worst_location = 0;
    double worst_value = 0;
    for (int i = 0; i < 20; ++i) {
        const EstimateScenario sc = make_estimate_scenario(gen);
        auto objective = [&sc](double r) {
            std::vector<ServiceState> working(sc.states);
            working.push_back({r, sc.new_snr});
            return total_probability(sc.params, working, sc.new_snr).value;
        };
        const GridArgmax oracle =
            dense_grid_argmax(objective, sc.range.lo, sc.range.hi, 100000);
        const ResourceEstimate est =
            estimate_resource(sc.params, sc.states, sc.new_snr, sc.range);
        const double span = sc.range.hi - sc.range.lo;
        const double location = std::abs(est.resource - oracle.x);
        const double value = std::abs(est.objective - oracle.value);
        worst_location = std::max(worst_location, location / span);
        worst_value = std::max(worst_value, value);
        if (location > 1e-6 * span + 1e-12 || value > 1e-9) c.pass = false;
    }
    c.detail = "worst_location_rel=" + fmt(worst_location) +
               " worst_value_diff=" + fmt(worst_value);
    return c;
}

Criterion normalization() {
    Criterion c{10, "density and pmf normalization", true, "", 0, 0};
    double worst_density = 0;
    for (double sigma : {0.5, 1.0, 2.0}) {
        const double integral = integrate_simpson(
            [sigma](double x) { return rayleigh_term(sigma, x); }, 0.0, 42.0 * sigma,
            1 << 15);
        worst_density = std::max(worst_density, std::abs(integral - 1.0));
    }
    double worst_pmf = 0;
    for (double lambda : {0.1, 1.0, 5.0, 10.0}) {
        double sum = 0;
        for (int n = 0; n <= 200; ++n) sum += poisson_pmf(lambda, n);
        worst_pmf = std::max(worst_pmf, std::abs(sum - 1.0));
    }
    c.pass = worst_density <= 1e-8 && worst_pmf <= 1e-12;
    c.detail = "density_err=" + fmt(worst_density) + " pmf_err=" + fmt(worst_pmf);
    return c;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

Criterion end_to_end() {
    Criterion c{11, "budget admission, determinism, cap never exceeded", true, "", 0, 0};

    ScenarioConfig config;
    config.category_count = 1;
    config.bound_params = {0.2, 0.4, 0.005, 0.002, 1.5, 100.0};
    config.allocation_params = {1.0, 0.05, 1.0, 1.0, 50.0};
    config.r_range = {25.0, 25.0};
    config.seed = 42;
    config.arrivals = {{0, 1.2}, {0, 0.8}, {0, 1.5}, {0, 0.4}, {0, 2.0}, {0, 1.0}};

    const SimulationReport report = run_scenario(config);
    long long admitted = 0;
    for (const ArrivalRecord& record : report.arrivals) {
        if (record.admitted) ++admitted;
    }
    const bool four_of_six =
        admitted == 4 && report.arrivals.back().total_after == 100.0;

    const auto base = std::filesystem::temp_directory_path() / "sliceweaver_acceptance";
    std::filesystem::remove_all(base);
    const auto first = emit_report(run_scenario(config), base / "first");
    const auto second = emit_report(run_scenario(config), base / "second");
    const bool byte_identical = read_file(first[0]) == read_file(second[0]) &&
                                read_file(first[1]) == read_file(second[1]);
    std::filesystem::remove_all(base);

    bool within_cap = report.slice_capacity <= report.service_cap_analytic;
    ScenarioConfig unbounded = config;
    unbounded.bound_params.a = 0.5;
    unbounded.bound_params.a_prime = 1.0;
    unbounded.bound_params.r_max = std::numeric_limits<double>::infinity();
    unbounded.r_range = {10.0, 10.0};
    const SimulationReport cap_report = run_scenario(unbounded);
    within_cap = within_cap && cap_report.slice_capacity <= cap_report.service_cap_analytic &&
                 cap_report.slice_capacity == 3;

    c.pass = four_of_six && byte_identical && within_cap;
    c.detail = "admitted=" + std::to_string(admitted) + "/6 byte_identical=" +
               (byte_identical ? "yes" : "no") + " caps_respected=" +
               (within_cap ? "yes" : "no");
    return c;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    std::vector<Criterion (*)()> criteria = {
        chromatic_poly_vs_enumeration,
        greedy_optimality,
        perfectness,
        layered_partite_count,
        variance_dominance,
        vanishing_conditions,
        sla_consistency,
        pmf_ratio_identity,
        optimizer_vs_oracle,
        normalization,
        end_to_end,
    };

    bool all_pass = true;
    for (auto* criterion : criteria) {
        const auto start = Clock::now();
        Criterion result = criterion();
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (result.limit_seconds > 0 && result.seconds > result.limit_seconds) {
            result.pass = false;
            result.detail += " TIME LIMIT EXCEEDED";
        }
        std::ostringstream time_note;
        time_note << " [" << fmt(result.seconds) << "s";
        if (result.limit_seconds > 0) time_note << " < " << result.limit_seconds << "s";
        time_note << "]";
        std::cout << (result.pass ? "[PASS]" : "[FAIL]") << " criterion "
                  << (result.id < 10 ? "0" : "") << result.id << ": " << result.name
                  << " | " << result.detail << time_note.str() << '\n';
        all_pass = all_pass && result.pass;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << '\n';
    return all_pass ? 0 : 1;
}

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sliceweaver/config.hpp"
#include "sliceweaver/errors.hpp"
#include "sliceweaver/graph.hpp"
#include "sliceweaver/report.hpp"
#include "sliceweaver/simulator.hpp"
#include "sliceweaver/verify.hpp"

namespace {

using namespace sliceweaver;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitVerification = 5;
constexpr int kExitIo = 6;
constexpr int kExitUsage = 64;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                           const std::optional<std::uint64_t>& config_seed) {
    if (flag_seed) return *flag_seed;
    if (config_seed) return *config_seed;
    if (const char* env = std::getenv("SLICE_WEAVER_SEED")) {
        const std::string text(env);
        if (text.empty() || text[0] == '-') {
            throw ValidationError("SLICE_WEAVER_SEED must be a decimal 64-bit unsigned integer");
        }
        errno = 0;
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(text.c_str(), &end, 10);
        if (end != text.c_str() + text.size() || errno == ERANGE) {
            throw ValidationError("SLICE_WEAVER_SEED must be a decimal 64-bit unsigned integer");
        }
        return parsed;
    }
    return 0;
}

std::vector<int> parse_layer_list(const std::string& text) {
    std::vector<int> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(
            start, comma == std::string::npos ? text.size() - start : comma - start);
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("--partite expects comma-separated layer sizes");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return sizes;
}

int run_simulate(const std::string& config_path,
                 const std::optional<std::uint64_t>& seed_flag,
                 const std::string& out_dir) {
    ScenarioConfig config = load_config_file(config_path);
    config.seed = resolve_seed(seed_flag, config.seed);
    const SimulationReport report = run_scenario(config);
    const auto files = emit_report(report, out_dir);
    for (const auto& file : files) std::cout << "wrote " << file.string() << '\n';
    std::cout << "slice_capacity=" << report.slice_capacity << '\n';
    return 0;
}

int run_coloring(int vertices, int colors, const std::string& partite) {
    if (!partite.empty()) {
        LayeredPartite layered{parse_layer_list(partite)};
        const DependencyGraph graph = layered.to_graph();
        const Coloring coloring = greedy_color(graph);
        const std::int64_t poly =
            chromatic_poly_layered_partite(layered.layer_count(), colors);
        std::cout << "graph=layered_partite\n";
        std::cout << "layers=" << partite << '\n';
        std::cout << "vertices=" << graph.vertex_count() << '\n';
        std::cout << "colors_available=" << colors << '\n';
        std::cout << "chromatic_polynomial=" << poly << '\n';
        std::cout << "greedy_colors_used=" << coloring.colors_used << '\n';
        return 0;
    }
    if (vertices < 0) {
        throw InputError("coloring: --vertices is required without --partite");
    }
    const DependencyGraph graph = build_dependency_graph(vertices);
    const Coloring coloring = greedy_color(graph);
    const std::int64_t poly = chromatic_poly_complete(vertices, colors);
    std::cout << "graph=complete\n";
    std::cout << "vertices=" << vertices << '\n';
    std::cout << "colors_available=" << colors << '\n';
    std::cout << "chromatic_polynomial=" << poly << '\n';
    std::cout << "greedy_colors_used=" << coloring.colors_used << '\n';
    return 0;
}

int run_capacity(const std::string& config_path, const std::optional<double>& load) {
    const ScenarioConfig config = load_config_file(config_path);
    const BoundParams& p = config.bound_params;
    const long long cap = service_cap(p);
    const VarianceBreakdown variance = variance_bound(p);
    const double mean_load = load ? *load : p.a * static_cast<double>(cap);
    const double sla = sla_lower_bound(p, mean_load);
    std::cout << "service_cap=" << cap << '\n';
    std::cout << "mean_allocation=" << format_number(p.mean_allocation()) << '\n';
    std::cout << "u_effective=" << format_number(variance.u_effective) << '\n';
    std::cout << "variance_term_sigma=" << format_number(variance.term_sigma) << '\n';
    std::cout << "variance_term_cov=" << format_number(variance.term_cov) << '\n';
    std::cout << "variance_term_mean=" << format_number(variance.term_mean) << '\n';
    std::cout << "variance_total=" << format_number(variance.total) << '\n';
    std::cout << "mean_load=" << format_number(mean_load) << '\n';
    std::cout << "sla_lower_bound=" << format_number(sla) << '\n';
    return 0;
}

int run_allocate(const std::string& config_path, double snr, int category) {
    const ScenarioConfig config = load_config_file(config_path);
    if (category < 0 || category >= config.category_count) {
        throw InputError("allocate: --category out of range");
    }
    const SimulationOutcome outcome = run_scenario_full(config);
    const auto& states = outcome.category_states[static_cast<std::size_t>(category)];
    const ResourceEstimate estimate =
        estimate_resource(config.allocation_params, states, snr, config.r_range);
    const bool would_admit =
        admit(estimate.resource, outcome.total_allocated,
              static_cast<long long>(states.size()), config.bound_params);
    std::cout << "category=" << category << '\n';
    std::cout << "existing_services=" << states.size() << '\n';
    std::cout << "estimated_resource=" << format_number(estimate.resource) << '\n';
    std::cout << "objective=" << format_number(estimate.objective) << '\n';
    std::cout << "s_derivative=" << format_number(estimate.s_derivative) << '\n';
    std::cout << "would_admit=" << (would_admit ? 1 : 0) << '\n';
    return 0;
}

int run_verify(bool full) {
    const auto results =
        run_verification(full ? VerifyBudget::Full : VerifyBudget::Small);
    bool all_pass = true;
    for (const PropertyResult& result : results) {
        std::cout << (result.pass ? "PASS " : "FAIL ") << result.name << "  "
                  << result.detail << '\n';
        all_pass = all_pass && result.pass;
    }
    std::cout << (all_pass ? "verification passed" : "verification FAILED") << '\n';
    return all_pass ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice-in-slice scheduling simulator and verification toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed_flag;
    auto* simulate = app.add_subcommand("simulate", "run a scenario and emit CSV/summary");
    simulate->add_option("--config", config_path, "scenario config file")->required();
    simulate->add_option("--seed", seed_flag, "seed override");
    simulate->add_option("--out", out_dir, "output directory")->required();

    int vertices = -1;
    int colors = 0;
    std::string partite;
    auto* coloring = app.add_subcommand("coloring", "chromatic counts and greedy coloring");
    coloring->add_option("--vertices", vertices, "vertex count of the complete graph");
    coloring->add_option("--colors", colors, "available colors")->required();
    coloring->add_option("--partite", partite, "comma-separated layer sizes");

    std::string capacity_config;
    std::optional<double> load;
    auto* capacity = app.add_subcommand("capacity", "capacity and variance bounds");
    capacity->add_option("--config", capacity_config, "scenario config file")->required();
    capacity->add_option("--load", load, "mean load for the SLA bound");

    std::string allocate_config;
    double snr = 0;
    int category = 0;
    auto* allocate = app.add_subcommand("allocate", "estimate a resource share");
    allocate->add_option("--config", allocate_config, "scenario config file")->required();
    allocate->add_option("--snr", snr, "incoming service SNR")->required();
    allocate->add_option("--category", category, "target category");

    bool full = false;
    auto* verify = app.add_subcommand("verify", "run oracle property suites");
    verify->add_flag("--full", full, "full budget (1e5-sample Monte Carlo)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (simulate->parsed()) return run_simulate(config_path, seed_flag, out_dir);
        if (coloring->parsed()) return run_coloring(vertices, colors, partite);
        if (capacity->parsed()) return run_capacity(capacity_config, load);
        if (allocate->parsed()) return run_allocate(allocate_config, snr, category);
        if (verify->parsed()) return run_verify(full);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const InputError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ModelError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const CapacityError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}

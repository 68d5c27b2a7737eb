#include "sliceweaver/simulator.hpp"

#include <cmath>
#include <string>

#include "sliceweaver/errors.hpp"
#include "sliceweaver/graph.hpp"

namespace sliceweaver {

namespace {

[[noreturn]] void rethrow_with_arrival(int index) {
    const std::string prefix = "arrival " + std::to_string(index) + ": ";
    try {
        throw;
    } catch (const InputError& e) {
        throw InputError(prefix + e.what());
    } catch (const CapacityError& e) {
        throw CapacityError(prefix + e.what());
    } catch (const ModelError& e) {
        throw ModelError(prefix + e.what());
    } catch (const NumericError& e) {
        throw NumericError(prefix + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(prefix + e.what());
    }
}

}  // namespace

void ScenarioConfig::validate() const {
    if (category_count < 1) throw ValidationError("category_count must be positive");
    bound_params.validate();
    allocation_params.validate();
    if (!std::isfinite(r_range.lo) || !(r_range.lo >= 0)) {
        throw ValidationError("r_lo must be finite and non-negative");
    }
    if (!std::isfinite(r_range.hi) || !(r_range.lo <= r_range.hi)) {
        throw ValidationError("r_hi must be finite and at least r_lo");
    }
    for (std::size_t i = 0; i < arrivals.size(); ++i) {
        const Arrival& arrival = arrivals[i];
        if (arrival.category < 0 || arrival.category >= category_count) {
            throw ValidationError("arrival " + std::to_string(i) +
                                  ": category out of range");
        }
        if (!std::isfinite(arrival.snr) || arrival.snr < 0) {
            throw ValidationError("arrival " + std::to_string(i) +
                                  ": snr must be finite and non-negative");
        }
    }
}

bool admit(double candidate_resource, double current_total, long long current_count,
           const BoundParams& p) {
    if (!(candidate_resource >= 0) || !(current_total >= 0) || current_count < 0) {
        throw InputError("admit: inputs must be non-negative");
    }
    return current_total + candidate_resource <= p.r_max &&
           current_count + 1 <= service_cap(p);
}

SimulationOutcome run_scenario_full(const ScenarioConfig& config) {
    config.validate();

    SimulationOutcome outcome;
    outcome.category_states.resize(static_cast<std::size_t>(config.category_count));
    std::vector<int> colors_used(static_cast<std::size_t>(config.category_count), 0);

    double total = 0;
    auto& records = outcome.report.arrivals;
    records.reserve(config.arrivals.size());

    for (std::size_t i = 0; i < config.arrivals.size(); ++i) {
        const Arrival& arrival = config.arrivals[i];
        const auto m = static_cast<std::size_t>(arrival.category);
        auto& states = outcome.category_states[m];
        ArrivalRecord record;
        record.index = static_cast<int>(i);
        record.category = arrival.category;
        try {
            const ResourceEstimate estimate = estimate_resource(
                config.allocation_params, states, arrival.snr, config.r_range);
            record.resource = estimate.resource;
            record.admitted = admit(estimate.resource, total,
                                    static_cast<long long>(states.size()),
                                    config.bound_params);
            if (record.admitted) {
                states.push_back({estimate.resource, arrival.snr});
                total += estimate.resource;
                const DependencyGraph graph =
                    build_dependency_graph(static_cast<int>(states.size()));
                const Coloring coloring = greedy_color(graph);
                colors_used[m] = coloring.colors_used;
                record.color = coloring.assignment.back();
            }
        } catch (...) {
            rethrow_with_arrival(record.index);
        }
        record.total_after = total;
        record.category_count_after = static_cast<int>(states.size());
        records.push_back(record);
    }

    std::vector<CategoryCapacity> capacities;
    capacities.reserve(static_cast<std::size_t>(config.category_count));
    for (int m = 0; m < config.category_count; ++m) {
        const auto admitted =
            static_cast<long long>(outcome.category_states[static_cast<std::size_t>(m)].size());
        capacities.push_back({m, admitted});
        outcome.report.categories.push_back(
            {m, admitted, colors_used[static_cast<std::size_t>(m)]});
    }

    outcome.total_allocated = total;
    outcome.report.slice_capacity = slice_capacity_sum(capacities);
    outcome.report.service_cap_analytic = service_cap(config.bound_params);
    outcome.report.variance = variance_bound(config.bound_params);
    outcome.report.mean_load = total / config.bound_params.r_max;
    outcome.report.sla_bound =
        sla_lower_bound(config.bound_params, outcome.report.mean_load);
    outcome.report.seed = config.seed.value_or(0);
    return outcome;
}

SimulationReport run_scenario(const ScenarioConfig& config) {
    return run_scenario_full(config).report;
}

}  // namespace sliceweaver

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sliceweaver/allocation.hpp"
#include "sliceweaver/capacity.hpp"

namespace sliceweaver {

struct Arrival {
    int category = 0;
    double snr = 0;
};

struct ScenarioConfig {
    int category_count = 1;
    std::vector<Arrival> arrivals;
    BoundParams bound_params;
    AllocationModelParams allocation_params;
    ResourceRange r_range;
    std::optional<std::uint64_t> seed;

    void validate() const;
};

struct ArrivalRecord {
    int index = 0;
    int category = 0;
    double resource = 0;
    bool admitted = false;
    double total_after = 0;
    std::optional<int> color;  // present iff admitted
    int category_count_after = 0;
};

struct CategorySummary {
    int category = 0;
    long long admitted = 0;
    int colors_used = 0;
};

struct SimulationReport {
    std::vector<ArrivalRecord> arrivals;
    std::vector<CategorySummary> categories;
    long long slice_capacity = 0;
    long long service_cap_analytic = 0;
    VarianceBreakdown variance;
    double mean_load = 0;  // realized total relative to r_max
    double sla_bound = 0;
    std::uint64_t seed = 0;
};

/// Full outcome of a run, including the admitted per-category states so
/// follow-up estimates can condition on them.
struct SimulationOutcome {
    SimulationReport report;
    std::vector<std::vector<ServiceState>> category_states;
    double total_allocated = 0;
};

/// Admission rule: the budget must hold and the category must stay within
/// its analytic service cap.
bool admit(double candidate_resource, double current_total, long long current_count,
           const BoundParams& p);

/// Sequential arrival loop: estimate the resource share against the
/// category's admitted services, admit or reject, rebuild and re-color the
/// category's dependency graph on admission. Deterministic per config.
SimulationOutcome run_scenario_full(const ScenarioConfig& config);

SimulationReport run_scenario(const ScenarioConfig& config);

}  // namespace sliceweaver

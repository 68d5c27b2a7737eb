#pragma once

#include <string>
#include <vector>

namespace sliceweaver {

/// Small finishes in seconds; Full runs the 1e5-sample Monte Carlo and
/// dense-grid checks.
enum class VerifyBudget { Small, Full };

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs every oracle-backed property suite and reports one result per
/// property. Deterministic: all seeds are fixed internally.
std::vector<PropertyResult> run_verification(VerifyBudget budget);

}  // namespace sliceweaver

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sliceweaver/simulator.hpp"

namespace sliceweaver {

/// Decimal with 9 significant digits; stable across runs and platforms.
std::string format_number(double value);

std::string render_arrivals_csv(const SimulationReport& report);
std::string render_summary(const SimulationReport& report);

/// Writes arrivals.csv and summary.txt into out_dir. Each file is staged to
/// a temporary name and renamed, so no partial file survives an error.
/// Returns the paths written.
std::vector<std::filesystem::path> emit_report(const SimulationReport& report,
                                               const std::filesystem::path& out_dir);

}  // namespace sliceweaver

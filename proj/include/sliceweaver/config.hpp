#pragma once

#include <filesystem>
#include <string_view>

#include "sliceweaver/simulator.hpp"

namespace sliceweaver {

/// Parses flat `key = value` scenario text. '#' starts a comment, repeated
/// `arrival = category,snr` lines keep file order, scalar keys may appear
/// once, unknown keys are rejected, and all invariants are validated.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config_file(const std::filesystem::path& path);

}  // namespace sliceweaver

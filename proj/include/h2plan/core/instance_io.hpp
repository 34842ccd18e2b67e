#pragma once

#include <filesystem>

#include "h2plan/core/types.hpp"

namespace h2plan {

/// Reads an instance directory (see docs/instance_format.md) and validates
/// it. Throws ParseError on malformed files and ValidationError listing every
/// violation otherwise. Monetary €/kW fields are converted to €/MW and €/GJ
/// prices to €/MWh on read.
NetworkModel load_instance(const std::filesystem::path& dir);

/// Parses without validating; for tools that want to report violations.
NetworkModel read_instance(const std::filesystem::path& dir);

/// Writes the instance file set so that load_instance restores an equal
/// model. Creates dir if needed.
void save_instance(const NetworkModel& model, const std::filesystem::path& dir);

}  // namespace h2plan

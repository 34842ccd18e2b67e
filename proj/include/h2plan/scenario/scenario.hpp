#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "h2plan/core/types.hpp"
#include "h2plan/lp/solver.hpp"
#include "h2plan/model/solution.hpp"
#include "h2plan/scenario/config.hpp"

namespace h2plan::scenario {

inline constexpr std::array<std::string_view, 5> kPresetNames{
    "R2050", "NoP2H2", "NoH2Storage", "NoH2Transmission", "NoETransmission"};

/// One of the five named variants. Throws std::invalid_argument otherwise.
ScenarioConfig preset(std::string_view name);
std::vector<ScenarioConfig> all_presets();

/// Plain key=value file: name plus any of the four allow_* switches (which
/// default to true). '#' starts a comment. Throws ParseError.
ScenarioConfig parse_scenario_text(std::string_view text, const std::string& source);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

/// A preset name, or otherwise the path of a scenario file.
ScenarioConfig resolve(const std::string& spec);

struct Outcome {
  ScenarioConfig config;
  lp::SolveStatus status = lp::SolveStatus::numerical_failure;
  std::optional<model::PlanningResult> result;  // set iff status is optimal
  lp::LpSolution solution;
};

struct SuiteOptions {
  lp::SolverOptions solver;
  bool parallel = true;
};

/// Builds the skeleton once, then fixes and solves every scenario. Outcomes
/// follow the order of `scenarios`; a failed solve does not stop the others.
std::vector<Outcome> run_suite(const NetworkModel& network, const std::vector<ScenarioConfig>& scenarios,
                               const SuiteOptions& options = {});

/// Outcome for `name`, or nullptr.
const Outcome* find(const std::vector<Outcome>& outcomes, std::string_view name);

}  // namespace h2plan::scenario

#pragma once

#include <string>

namespace h2plan {

/// Capability switches of a scenario variant. Every switch that is off only
/// fixes investment variables to zero on the shared model skeleton.
struct ScenarioConfig {
  std::string name = "R2050";
  bool allow_p2h2 = true;
  bool allow_h2_storage = true;
  bool allow_h2_transmission = true;
  bool allow_e_transmission_expansion = true;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

}  // namespace h2plan

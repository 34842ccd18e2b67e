#pragma once

#include <cstdint>

#include "h2plan/core/types.hpp"

namespace h2plan {

struct SyntheticSpec {
  int nodes = 3;
  int periods = 24;
  int h2_block_len = 6;
  std::uint64_t seed = 1;
  bool flexible_loads = true;
};

/// Seeded random instance: nodes on a ring (a chain for two nodes) joined by
/// electricity corridors and retrofittable gas pipelines, with solar, wind,
/// gas power, the four hydrogen technologies, batteries and hydrogen
/// storage everywhere. Node 0 bans CO2 storage. Initial electrolysers cover
/// more than half of the hydrogen demand, so every scenario preset is
/// feasible. Identical specs give identical instances.
NetworkModel synthetic_instance(const SyntheticSpec& spec);

}  // namespace h2plan

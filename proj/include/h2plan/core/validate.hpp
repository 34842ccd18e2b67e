#pragma once

#include <vector>

#include "h2plan/core/errors.hpp"
#include "h2plan/core/types.hpp"

namespace h2plan {

/// Every broken invariant of the instance, in a fixed order (grid, nodes,
/// technologies, storages, pipelines, corridors, prices). Pure.
std::vector<Violation> validate_network(const NetworkModel& model);

/// Pipeline-only checks, shared with the retrofit constraint emitter.
std::vector<Violation> validate_pipeline(const Pipeline& pipeline);

}  // namespace h2plan

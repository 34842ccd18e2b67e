#pragma once

#include <vector>

#include "h2plan/core/types.hpp"
#include "h2plan/lp/problem.hpp"
#include "h2plan/retrofit/retrofit.hpp"
#include "h2plan/scenario/config.hpp"

namespace h2plan::model {

struct TechVars {
  std::vector<lp::ColId> output;  // MWh of output per period
  lp::ColId new_capacity;         // MW
  std::vector<lp::RowId> capacity_rows;
};

/// Electricity storages work per period, hydrogen storages per block.
struct StorageVars {
  std::vector<lp::ColId> charge;
  std::vector<lp::ColId> discharge;
  std::vector<lp::ColId> level;
  lp::ColId new_energy;  // MWh
  lp::ColId new_power;   // MW
};

struct CorridorVars {
  std::vector<lp::ColId> fwd;
  std::vector<lp::ColId> bwd;
  lp::ColId new_capacity;
};

struct FlexVars {
  std::size_t node = 0;
  std::size_t load = 0;
  std::vector<lp::ColId> draw;  // MWh per period
};

/// Typed registry of everything the planning LP contains. Indices follow the
/// order of the corresponding NetworkModel vectors.
struct ModelHandle {
  lp::LpBuilder builder;
  std::vector<TechVars> techs;
  std::vector<StorageVars> storages;
  std::vector<CorridorVars> corridors;
  std::vector<retrofit::RetrofitVars> pipelines;
  std::vector<retrofit::RetrofitCost> pipeline_costs;
  std::vector<FlexVars> flex;
  std::vector<std::vector<lp::RowId>> electricity_balance;  // node x period
  std::vector<std::vector<lp::RowId>> h2_balance;           // node x block
  std::vector<lp::RowId> smr_cap;  // per node, index -1 when the node has no SMR
};

/// Scenario-independent model. Throws ValidationError on invalid networks.
ModelHandle build_skeleton(const NetworkModel& network);

/// Fixes the investment columns that `scenario` disables.
void apply_scenario(ModelHandle& handle, const NetworkModel& network, const ScenarioConfig& scenario);

/// build_skeleton + apply_scenario, returned with the finished LP.
struct BuiltModel {
  ModelHandle handle;
  lp::LpProblem problem;
};
BuiltModel build(const NetworkModel& network, const ScenarioConfig& scenario);

lp::LpProblem build_model(const NetworkModel& network, const ScenarioConfig& scenario);

}  // namespace h2plan::model

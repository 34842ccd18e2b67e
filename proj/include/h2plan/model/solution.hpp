#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "h2plan/core/types.hpp"
#include "h2plan/lp/solver.hpp"
#include "h2plan/model/expansion.hpp"
#include "h2plan/scenario/config.hpp"

namespace h2plan::model {

/// Raised when a non-optimal solve is turned into a plan.
class SolveError : public std::runtime_error {
 public:
  SolveError(lp::SolveStatus status, const std::string& scenario);
  lp::SolveStatus status() const { return status_; }

 private:
  lp::SolveStatus status_;
};

struct TechResult {
  double new_capacity = 0.0;    // MW
  std::vector<double> output;   // MWh per period
};

struct StorageResult {
  double new_energy = 0.0;  // MWh
  double new_power = 0.0;   // MW
  std::vector<double> charge;
  std::vector<double> discharge;
  std::vector<double> level;
};

struct CorridorResult {
  double new_capacity = 0.0;
  std::vector<double> fwd;  // MWh per period
  std::vector<double> bwd;
};

struct PipelineResult {
  double cap_retrofit1 = 0.0;
  double cap_retrofit2 = 0.0;
  double cap_new = 0.0;
  /// Methane capacity (MW) left after the first retrofit.
  double ch4_capacity = 0.0;
  std::vector<double> h2_fwd;  // MWh per block
  std::vector<double> h2_bwd;
  std::vector<double> ch4_flow;
};

/// Named view of an optimal planning solve. Operational quantities cover
/// the modelled horizon; prices are per MWh of annual cost.
struct PlanningResult {
  std::string scenario;
  double objective = 0.0;
  double dual_objective = 0.0;
  std::int64_t iterations = 0;
  std::vector<TechResult> techs;
  std::vector<StorageResult> storages;
  std::vector<CorridorResult> corridors;
  std::vector<PipelineResult> pipelines;
  std::vector<std::vector<double>> flex_draw;        // per flexible load, per period
  std::vector<std::vector<double>> electricity_price;  // node x period, €/MWh
  std::vector<std::vector<double>> h2_price;           // node x block, €/MWh
};

/// Maps an optimal LP solution back onto the network. Values within 1e-9
/// (relative) of a bound are snapped onto it. Throws SolveError otherwise.
PlanningResult extract_solution(const lp::LpProblem& problem, const lp::LpSolution& raw,
                                const ModelHandle& handle, const NetworkModel& network,
                                const ScenarioConfig& scenario);

/// Objective recomputed from the named quantities of `result`.
double recompute_objective(const PlanningResult& result, const NetworkModel& network);

}  // namespace h2plan::model

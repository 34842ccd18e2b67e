#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "h2plan/core/types.hpp"
#include "h2plan/model/solution.hpp"
#include "h2plan/scenario/config.hpp"

namespace h2plan::report {

enum class H2Family { electrolysis, smr, smr_ccs54, smr_ccs89 };
inline constexpr std::array<std::string_view, 4> kH2FamilyNames{"electrolysis", "smr", "smr_ccs54", "smr_ccs89"};

enum class CostCategory {
  vre_capex,
  other_generation_capex,
  p2h2_capex,
  smr_capex,
  transmission_capex,
  retrofit_capex,
  storage_capex,
  fixed_om,
  variable_generation,
  variable_h2,
  co2,
};
inline constexpr std::array<std::string_view, 11> kCostCategoryNames{
    "vre_capex",     "other_generation_capex", "p2h2_capex",          "smr_capex",
    "transmission_capex", "retrofit_capex",    "storage_capex",       "fixed_om",
    "variable_generation", "variable_h2",      "co2"};

struct CapacityRow {
  std::string technology;
  std::string node;
  TechClass tech_class = TechClass::conventional;
  double initial_mw = 0.0;
  double new_mw = 0.0;

  friend bool operator==(const CapacityRow&, const CapacityRow&) = default;
};

struct StorageRow {
  std::string storage;
  std::string node;
  Carrier carrier = Carrier::electricity;
  double new_energy_mwh = 0.0;
  double new_power_mw = 0.0;

  friend bool operator==(const StorageRow&, const StorageRow&) = default;
};

struct CorridorRow {
  std::string corridor;
  std::string from;
  std::string to;
  double initial_mw = 0.0;
  double new_mw = 0.0;

  friend bool operator==(const CorridorRow&, const CorridorRow&) = default;
};

struct PipelineRow {
  std::string pipeline;
  std::string from;
  std::string to;
  double retrofit1_mw = 0.0;
  double retrofit2_mw = 0.0;
  double new_mw = 0.0;
  double h2_capacity_mw = 0.0;  // initial + both retrofits + new build
  double ch4_residual_mw = 0.0;

  friend bool operator==(const PipelineRow&, const PipelineRow&) = default;
};

/// Annual figures (the horizon scaled by the operational weight) for one
/// scenario. Trade matrices hold the net flow from row node to column node.
struct SystemReport {
  std::string scenario;
  double objective = 0.0;
  std::vector<std::string> nodes;
  std::array<double, 4> h2_supply{};  // MWh by H2Family
  std::vector<CapacityRow> capacity;
  double co2_electricity_t = 0.0;
  double co2_h2_t = 0.0;
  std::array<double, 11> cost{};  // € by CostCategory
  std::vector<std::vector<double>> trade_electricity;  // MWh
  std::vector<std::vector<double>> trade_h2;           // MWh
  std::vector<StorageRow> storage;
  std::vector<CorridorRow> corridors;
  std::vector<PipelineRow> pipelines;
  double retrofit_share = 0.0;
  double gas_consumption_mwh = 0.0;

  double co2_total_t() const { return co2_electricity_t + co2_h2_t; }
  double cost_total() const;
  double h2_supply_total() const;

  friend bool operator==(const SystemReport&, const SystemReport&) = default;
};

SystemReport build_report(const model::PlanningResult& result, const NetworkModel& network,
                          const ScenarioConfig& scenario);

}  // namespace h2plan::report

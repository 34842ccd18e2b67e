#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace h2plan {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// Unit conversions applied when reading instance files.
inline constexpr double kMwPerKw = 1000.0;    // €/kW -> €/MW
inline constexpr double kGjPerMwh = 3.6;      // €/GJ -> €/MWh
inline constexpr double kKgPerTon = 1000.0;

enum class Carrier { none, gas, electricity, hydrogen };

enum class TechClass {
  vre,
  conventional,
  smr,
  smr_ccs54,
  smr_ccs89,
  electrolyser,
  hydrogen_to_power,
};

std::string_view to_string(Carrier c);
std::string_view to_string(TechClass c);
std::optional<Carrier> parse_carrier(std::string_view s);
std::optional<TechClass> parse_tech_class(std::string_view s);

inline bool is_smr_family(TechClass c) {
  return c == TechClass::smr || c == TechClass::smr_ccs54 || c == TechClass::smr_ccs89;
}

/// Electricity periods and the coarser hydrogen blocks built from them.
struct TimeGrid {
  int horizon_steps = 1;
  double step_duration = 1.0;  // hours per electricity period
  int h2_block_len = 1;        // electricity periods per hydrogen block
  /// Multiplier turning horizon operating costs into annual costs (a
  /// representative week uses 52). Investment terms are already annual.
  double operational_weight = 1.0;

  int num_blocks() const { return h2_block_len > 0 ? horizon_steps / h2_block_len : 0; }
  double block_duration() const { return h2_block_len * step_duration; }
  int block_of(int period) const { return period / h2_block_len; }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Shiftable demand: per window of window_len periods the drawn energy is
/// fixed, while the per-period draw may move within [min_draw, max_draw].
/// A negative min_draw lets the load feed back to the grid.
struct FlexibleLoad {
  double total_energy_per_window = 0.0;  // MWh
  int window_len = 1;                    // periods
  double max_draw = 0.0;                 // MW
  double min_draw = 0.0;                 // MW

  friend bool operator==(const FlexibleLoad&, const FlexibleLoad&) = default;
};

struct Node {
  std::string id;
  bool allows_co2_storage = true;
  std::vector<double> electricity_demand;  // MWh per period
  std::vector<double> h2_demand;           // MWh per hydrogen block
  std::vector<FlexibleLoad> flexible_loads;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Conversion or generation unit. Costs in € per MW of output, energy in
/// MWh of output; emissions are per MWh of output.
struct Technology {
  std::string id;
  std::string node;
  TechClass tech_class = TechClass::conventional;
  Carrier carrier_in = Carrier::none;
  Carrier carrier_out = Carrier::electricity;
  std::string fuel;                 // key into PriceSet::fuel_prices, may be empty
  double capex_annualized = 0.0;    // €/MW/yr
  double fixed_om = 0.0;            // €/MW/yr
  double efficiency = 1.0;          // output per input
  double emission_factor = 0.0;     // kg CO2 per MWh output
  double ccs_capture_factor = 0.0;  // kg CO2 captured per MWh output
  double initial_capacity = 0.0;    // MW
  double max_new_capacity = kUnbounded;
  std::vector<double> availability;  // per period in [0,1]; empty means 1
  double variable_cost_extra = 0.0;  // €/MWh output

  double availability_at(int period) const {
    return availability.empty() ? 1.0 : availability[period];
  }
  bool has_ccs() const { return ccs_capture_factor > 0.0; }

  friend bool operator==(const Technology&, const Technology&) = default;
};

struct Storage {
  std::string id;
  std::string node;
  Carrier carrier = Carrier::electricity;
  double charge_eff = 1.0;
  double discharge_eff = 1.0;
  double energy_capex_annualized = 0.0;  // €/MWh/yr
  double power_capex_annualized = 0.0;   // €/MW/yr
  double initial_energy_capacity = 0.0;  // MWh
  double initial_power_capacity = 0.0;   // MW
  bool investable = false;

  friend bool operator==(const Storage&, const Storage&) = default;
};

/// Methane corridor that can be repurposed for hydrogen in two retrofit
/// levels, plus optional new hydrogen capacity along the same route.
struct Pipeline {
  std::string id;
  std::string from_node;
  std::string to_node;
  double cap_ch4_init = 0.0;     // MW of methane energy flow
  double cap_h2_init = 0.0;      // MW of hydrogen energy flow
  double eta1 = 0.6;             // capacity fraction after the first retrofit
  double eta2 = 0.8;             // capacity fraction after the second retrofit
  double capex_retrofit1 = 0.0;  // €/MW/yr
  double capex_retrofit2 = 0.0;  // €/MW/yr
  double capex_new = 0.0;        // €/MW/yr
  bool new_buildable = true;

  friend bool operator==(const Pipeline&, const Pipeline&) = default;
};

/// Bidirectional electricity interconnector; the capacity applies to both
/// directions.
struct TransmissionCorridor {
  std::string id;
  std::string from_node;
  std::string to_node;
  double initial_capacity = 0.0;   // MW
  double capex_annualized = 0.0;   // €/MW/yr
  bool expandable = true;

  friend bool operator==(const TransmissionCorridor&, const TransmissionCorridor&) = default;
};

struct PriceSet {
  std::map<std::string, double> fuel_prices;  // €/MWh of fuel
  double co2_price = 0.0;                      // €/t

  double fuel_price(const std::string& fuel) const;

  friend bool operator==(const PriceSet&, const PriceSet&) = default;
};

struct NetworkModel {
  TimeGrid grid;
  std::vector<Node> nodes;
  std::vector<Technology> technologies;
  std::vector<Storage> storages;
  std::vector<Pipeline> pipelines;
  std::vector<TransmissionCorridor> corridors;
  PriceSet prices;

  std::optional<std::size_t> node_index(std::string_view id) const;
  std::optional<std::size_t> technology_index(std::string_view id) const;

  friend bool operator==(const NetworkModel&, const NetworkModel&) = default;
};

/// Fuel cost plus CO2 cost plus extra variable cost, per MWh of output,
/// before the operational weight is applied.
double variable_cost(const Technology& tech, const PriceSet& prices);

}  // namespace h2plan

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "h2plan/core/types.hpp"

namespace h2plan::testing {

inline std::filesystem::path source_path(const std::string& rel) {
  return std::filesystem::path(H2PLAN_SOURCE_DIR) / rel;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("h2plan_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Node make_node(const std::string& id, int periods, int blocks, double elec, double h2,
                      bool co2_storage = true) {
  Node n;
  n.id = id;
  n.allows_co2_storage = co2_storage;
  n.electricity_demand.assign(periods, elec);
  n.h2_demand.assign(blocks, h2);
  return n;
}

inline Technology make_tech(const std::string& id, const std::string& node, TechClass cls, Carrier in,
                            Carrier out, double initial, double capex = 0.0, double fom = 0.0) {
  Technology t;
  t.id = id;
  t.node = node;
  t.tech_class = cls;
  t.carrier_in = in;
  t.carrier_out = out;
  t.initial_capacity = initial;
  t.capex_annualized = capex;
  t.fixed_om = fom;
  return t;
}

/// One node, two hourly periods, 100 MWh demand each, served by a single
/// gas plant burning natural gas at 27.144 €/MWh with efficiency 0.58.
inline NetworkModel one_node_gas(double demand = 100.0) {
  NetworkModel m;
  m.grid = TimeGrid{2, 1.0, 1, 1.0};
  m.nodes.push_back(make_node("A", 2, 2, demand, 0.0));
  auto gas = make_tech("ccgt", "A", TechClass::conventional, Carrier::gas, Carrier::electricity, 500.0, 50000.0,
                       20000.0);
  gas.fuel = "natural_gas";
  gas.efficiency = 0.58;
  gas.emission_factor = 348.0;
  m.technologies.push_back(gas);
  m.prices.fuel_prices["natural_gas"] = 7.54 * 3.6;
  m.prices.co2_price = 250.0;
  return m;
}

/// Two nodes joined by one gas pipeline (10000 MW, eta 0.6/0.8, no existing
/// H2 capacity, no new build). All hydrogen is made at A and B needs
/// 8000 MW, which only a full first plus full second retrofit can carry.
inline NetworkModel retrofit_corridor() {
  NetworkModel m;
  m.grid = TimeGrid{4, 1.0, 2, 1.0};
  m.nodes.push_back(make_node("A", 4, 2, 0.0, 0.0));
  m.nodes.push_back(make_node("B", 4, 2, 0.0, 8000.0 * 2.0));
  auto gen = make_tech("gen_A", "A", TechClass::conventional, Carrier::none, Carrier::electricity, 20000.0);
  gen.variable_cost_extra = 10.0;
  m.technologies.push_back(gen);
  auto ely = make_tech("ely_A", "A", TechClass::electrolyser, Carrier::electricity, Carrier::hydrogen, 10000.0);
  ely.efficiency = 0.68;
  m.technologies.push_back(ely);
  Pipeline l;
  l.id = "A_B";
  l.from_node = "A";
  l.to_node = "B";
  l.cap_ch4_init = 10000.0;
  l.capex_retrofit1 = 30000.0;
  l.capex_retrofit2 = 35000.0;
  l.capex_new = 50000.0;
  l.new_buildable = false;
  m.pipelines.push_back(l);
  return m;
}

}  // namespace h2plan::testing

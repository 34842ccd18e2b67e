#include "h2plan/core/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "h2plan/core/defaults.hpp"

namespace h2plan {

namespace {

// Overnight €/kW turned into €/MW/yr.
double annual(double eur_per_kw, int years) {
  return eur_per_kw * kMwPerKw * defaults::annuity_factor(defaults::kDiscountRate, years);
}

}  // namespace

NetworkModel synthetic_instance(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };

  NetworkModel m;
  m.grid.horizon_steps = spec.periods;
  m.grid.step_duration = 1.0;
  m.grid.h2_block_len = spec.h2_block_len;
  m.grid.operational_weight = 8760.0 / spec.periods;
  m.prices = defaults::default_prices();
  const int blocks = m.grid.num_blocks();
  const double block_hours = m.grid.block_duration();
  constexpr double pi = std::numbers::pi;

  for (int i = 0; i < spec.nodes; ++i) {
    Node n;
    n.id = fmt::format("N{}", i);
    n.allows_co2_storage = i != 0;
    const double base = uniform(2000, 6000);
    const double phase = uniform(-2, 2);
    for (int t = 0; t < spec.periods; ++t) {
      const double daily = 1.0 + 0.25 * std::sin(2 * pi * (t % 24 - 8 + phase) / 24);
      n.electricity_demand.push_back(std::round(base * daily * uniform(0.95, 1.05)));
    }
    const double h2_rate = uniform(500, 2000);
    double peak_rate = 0.0;
    for (int b = 0; b < blocks; ++b) {
      const double rate = h2_rate * uniform(0.9, 1.1);
      peak_rate = std::max(peak_rate, rate);
      n.h2_demand.push_back(std::round(rate * block_hours));
    }
    if (spec.flexible_loads) {
      FlexibleLoad f;
      f.window_len = spec.periods % 24 == 0 ? 24 : spec.periods;
      f.max_draw = std::round(0.1 * base);
      f.min_draw = std::round(-0.02 * base);
      f.total_energy_per_window = std::round(0.04 * base) * f.window_len;
      n.flexible_loads.push_back(f);
    }

    Technology solar;
    solar.id = fmt::format("solar_{}", i);
    solar.node = n.id;
    solar.tech_class = TechClass::vre;
    solar.capex_annualized = annual(uniform(350, 500), 25);
    solar.fixed_om = 10 * kMwPerKw;
    solar.initial_capacity = std::round(uniform(0, 0.5) * base);
    const double sun = uniform(0.6, 1.0);
    for (int t = 0; t < spec.periods; ++t) {
      const double h = t % 24;
      solar.availability.push_back(std::max(0.0, std::sin(pi * (h - 6) / 12)) * sun * uniform(0.8, 1.0));
    }

    Technology wind;
    wind.id = fmt::format("wind_{}", i);
    wind.node = n.id;
    wind.tech_class = TechClass::vre;
    wind.capex_annualized = annual(uniform(1000, 1400), 25);
    wind.fixed_om = 30 * kMwPerKw;
    wind.initial_capacity = std::round(uniform(0, 0.5) * base);
    double w = uniform(0.2, 0.6);
    for (int t = 0; t < spec.periods; ++t) {
      w = std::clamp(w + uniform(-0.1, 0.1), 0.05, 0.95);
      wind.availability.push_back(w);
    }

    Technology gas;
    gas.id = fmt::format("ccgt_{}", i);
    gas.node = n.id;
    gas.tech_class = TechClass::conventional;
    gas.carrier_in = Carrier::gas;
    gas.fuel = "natural_gas";
    gas.efficiency = 0.58;
    gas.emission_factor = std::round(202.0 / gas.efficiency);
    gas.capex_annualized = annual(800, 30);
    gas.fixed_om = 20 * kMwPerKw;
    gas.initial_capacity = std::round(0.5 * base);

    m.technologies.push_back(std::move(solar));
    m.technologies.push_back(std::move(wind));
    m.technologies.push_back(std::move(gas));
    m.technologies.push_back(defaults::make_h2_technology(TechClass::smr, fmt::format("smr_{}", i), n.id,
                                                          std::round(uniform(0, 0.3) * h2_rate)));
    m.technologies.push_back(defaults::make_h2_technology(TechClass::smr_ccs54, fmt::format("smr54_{}", i), n.id, 0));
    m.technologies.push_back(defaults::make_h2_technology(TechClass::smr_ccs89, fmt::format("smr89_{}", i), n.id, 0));
    m.technologies.push_back(defaults::make_h2_technology(TechClass::electrolyser, fmt::format("ely_{}", i), n.id,
                                                          std::ceil(uniform(0.55, 0.8) * peak_rate)));

    Storage battery;
    battery.id = fmt::format("bat_{}", i);
    battery.node = n.id;
    battery.carrier = Carrier::electricity;
    battery.charge_eff = 0.95;
    battery.discharge_eff = 0.95;
    battery.energy_capex_annualized = annual(150, 15);
    battery.power_capex_annualized = annual(100, 15);
    battery.investable = true;
    m.storages.push_back(std::move(battery));

    Storage cavern;
    cavern.id = fmt::format("h2s_{}", i);
    cavern.node = n.id;
    cavern.carrier = Carrier::hydrogen;
    cavern.charge_eff = 0.98;
    cavern.discharge_eff = 0.98;
    cavern.energy_capex_annualized = annual(uniform(5, 15), 40);
    cavern.power_capex_annualized = annual(uniform(50, 150), 40);
    cavern.investable = true;
    m.storages.push_back(std::move(cavern));

    m.nodes.push_back(std::move(n));
  }

  const int links = spec.nodes < 2 ? 0 : (spec.nodes == 2 ? 1 : spec.nodes);
  for (int k = 0; k < links; ++k) {
    const auto from = m.nodes[k].id;
    const auto to = m.nodes[(k + 1) % spec.nodes].id;
    TransmissionCorridor c;
    c.id = fmt::format("e_{}_{}", from, to);
    c.from_node = from;
    c.to_node = to;
    c.initial_capacity = std::round(uniform(500, 2000));
    c.capex_annualized = annual(uniform(800, 1500), 40);
    c.expandable = true;
    m.corridors.push_back(std::move(c));

    Pipeline l;
    l.id = fmt::format("g_{}_{}", from, to);
    l.from_node = from;
    l.to_node = to;
    l.cap_ch4_init = std::round(uniform(2000, 8000));
    l.eta1 = defaults::kEta1;
    l.eta2 = defaults::kEta2;
    l.capex_new = annual(uniform(500, 700), 50);
    l.capex_retrofit1 = std::round(0.25 * l.capex_new);
    l.capex_retrofit2 = std::round(0.38 * l.capex_new);
    m.pipelines.push_back(std::move(l));
  }
  return m;
}

}  // namespace h2plan

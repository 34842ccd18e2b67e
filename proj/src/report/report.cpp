#include "h2plan/report/report.hpp"

#include <numeric>

#include "h2plan/retrofit/retrofit.hpp"

namespace h2plan::report {

double SystemReport::cost_total() const { return std::accumulate(cost.begin(), cost.end(), 0.0); }

double SystemReport::h2_supply_total() const { return std::accumulate(h2_supply.begin(), h2_supply.end(), 0.0); }

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void add(std::array<double, 11>& cost, CostCategory c, double v) { cost[static_cast<std::size_t>(c)] += v; }

CostCategory capex_category(TechClass c) {
  switch (c) {
    case TechClass::vre: return CostCategory::vre_capex;
    case TechClass::electrolyser: return CostCategory::p2h2_capex;
    case TechClass::smr:
    case TechClass::smr_ccs54:
    case TechClass::smr_ccs89: return CostCategory::smr_capex;
    default: return CostCategory::other_generation_capex;
  }
}

}  // namespace

SystemReport build_report(const model::PlanningResult& r, const NetworkModel& net, const ScenarioConfig& scenario) {
  SystemReport rep;
  rep.scenario = scenario.name;
  rep.objective = r.objective;
  const double weight = net.grid.operational_weight;
  const auto n_nodes = net.nodes.size();
  for (const auto& n : net.nodes) rep.nodes.push_back(n.id);

  double tons = 0.0;
  for (std::size_t k = 0; k < net.technologies.size(); ++k) {
    const auto& t = net.technologies[k];
    const auto& res = r.techs[k];
    const double energy = weight * sum(res.output);
    rep.capacity.push_back({t.id, t.node, t.tech_class, t.initial_capacity, res.new_capacity});

    switch (t.tech_class) {
      case TechClass::electrolyser: rep.h2_supply[0] += energy; break;
      case TechClass::smr: rep.h2_supply[1] += energy; break;
      case TechClass::smr_ccs54: rep.h2_supply[2] += energy; break;
      case TechClass::smr_ccs89: rep.h2_supply[3] += energy; break;
      default: break;
    }
    const double t_co2 = energy * t.emission_factor / kKgPerTon;
    tons += t_co2;
    if (is_smr_family(t.tech_class)) rep.co2_h2_t += t_co2;
    else rep.co2_electricity_t += t_co2;
    if (t.carrier_in == Carrier::gas || t.fuel == "natural_gas") rep.gas_consumption_mwh += energy / t.efficiency;

    add(rep.cost, capex_category(t.tech_class), t.capex_annualized * res.new_capacity);
    add(rep.cost, CostCategory::fixed_om, t.fixed_om * (t.initial_capacity + res.new_capacity));
    const double fuel = t.fuel.empty() ? 0.0 : net.prices.fuel_price(t.fuel) / t.efficiency;
    add(rep.cost, t.carrier_out == Carrier::hydrogen ? CostCategory::variable_h2 : CostCategory::variable_generation,
        energy * (fuel + t.variable_cost_extra));
  }
  add(rep.cost, CostCategory::co2, net.prices.co2_price * tons);

  for (std::size_t k = 0; k < net.storages.size(); ++k) {
    const auto& s = net.storages[k];
    const auto& res = r.storages[k];
    rep.storage.push_back({s.id, s.node, s.carrier, res.new_energy, res.new_power});
    add(rep.cost, CostCategory::storage_capex,
        s.energy_capex_annualized * res.new_energy + s.power_capex_annualized * res.new_power);
  }

  rep.trade_electricity.assign(n_nodes, std::vector<double>(n_nodes, 0.0));
  rep.trade_h2.assign(n_nodes, std::vector<double>(n_nodes, 0.0));
  auto record = [&](std::vector<std::vector<double>>& m, std::size_t a, std::size_t b, double net_flow) {
    m[a][b] += net_flow;
    m[b][a] -= net_flow;
  };
  for (std::size_t k = 0; k < net.corridors.size(); ++k) {
    const auto& c = net.corridors[k];
    const auto& res = r.corridors[k];
    rep.corridors.push_back({c.id, c.from_node, c.to_node, c.initial_capacity, res.new_capacity});
    add(rep.cost, CostCategory::transmission_capex, c.capex_annualized * res.new_capacity);
    record(rep.trade_electricity, *net.node_index(c.from_node), *net.node_index(c.to_node),
           weight * (sum(res.fwd) - sum(res.bwd)));
  }

  double withdrawn = 0.0, ch4_total = 0.0;
  for (std::size_t k = 0; k < net.pipelines.size(); ++k) {
    const auto& l = net.pipelines[k];
    const auto& res = r.pipelines[k];
    rep.pipelines.push_back({l.id, l.from_node, l.to_node, res.cap_retrofit1, res.cap_retrofit2, res.cap_new,
                             l.cap_h2_init + res.cap_retrofit1 + res.cap_retrofit2 + res.cap_new,
                             res.ch4_capacity});
    add(rep.cost, CostCategory::retrofit_capex,
        retrofit::retrofit_cost(l, res.cap_retrofit1, res.cap_retrofit2, 0.0));
    add(rep.cost, CostCategory::transmission_capex, l.capex_new * res.cap_new);
    record(rep.trade_h2, *net.node_index(l.from_node), *net.node_index(l.to_node),
           weight * (sum(res.h2_fwd) - sum(res.h2_bwd)));
    withdrawn += res.cap_retrofit1 / l.eta1;
    ch4_total += l.cap_ch4_init;
  }
  rep.retrofit_share = ch4_total > 0.0 ? withdrawn / ch4_total : 0.0;
  return rep;
}

}  // namespace h2plan::report

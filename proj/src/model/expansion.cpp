#include "h2plan/model/expansion.hpp"

#include <fmt/format.h>

#include "h2plan/core/defaults.hpp"
#include "h2plan/core/validate.hpp"

namespace h2plan::model {

using lp::ColId;
using lp::kInf;
using lp::RowId;
using lp::Term;

namespace {

class SkeletonBuilder {
 public:
  SkeletonBuilder(const NetworkModel& net, ModelHandle& h) : net_(net), h_(h), b_(h.builder) {}

  void run() {
    const auto& g = net_.grid;
    periods_ = g.horizon_steps;
    blocks_ = g.num_blocks();
    const auto n_nodes = net_.nodes.size();
    elec_terms_.assign(n_nodes, std::vector<std::vector<Term>>(periods_));
    h2_terms_.assign(n_nodes, std::vector<std::vector<Term>>(blocks_));
    smr_terms_.assign(n_nodes, {});

    b_.set_name("H2PLAN");
    for (std::size_t k = 0; k < net_.technologies.size(); ++k) add_technology(k);
    for (std::size_t k = 0; k < net_.storages.size(); ++k) add_storage(k);
    for (std::size_t k = 0; k < net_.corridors.size(); ++k) add_corridor(k);
    for (std::size_t k = 0; k < net_.pipelines.size(); ++k) add_pipeline(k);
    for (std::size_t n = 0; n < n_nodes; ++n)
      for (std::size_t f = 0; f < net_.nodes[n].flexible_loads.size(); ++f) add_flexible(n, f);
    add_balances();
  }

 private:
  std::size_t node(const std::string& id) const { return *net_.node_index(id); }

  void add_technology(std::size_t k) {
    const auto& t = net_.technologies[k];
    const auto n = node(t.node);
    const double dt = net_.grid.step_duration;
    const double weight = net_.grid.operational_weight;
    TechVars v;
    double max_new = t.max_new_capacity;
    if (t.has_ccs() && !net_.nodes[n].allows_co2_storage) max_new = 0.0;
    v.new_capacity = b_.add_column("new_" + t.id, 0.0, max_new, t.capex_annualized + t.fixed_om);
    b_.add_objective_constant(t.fixed_om * t.initial_capacity);
    const double cost = weight * variable_cost(t, net_.prices);
    for (int p = 0; p < periods_; ++p) {
      const auto x = b_.add_column(fmt::format("gen_{}_{}", t.id, p), 0.0, kInf, cost);
      v.output.push_back(x);
      const double avail = t.availability_at(p) * dt;
      v.capacity_rows.push_back(b_.add_row(fmt::format("cap_{}_{}", t.id, p), -kInf,
                                           avail * t.initial_capacity,
                                           {{x, 1.0}, {v.new_capacity, -avail}}));
      const int blk = net_.grid.block_of(p);
      if (t.carrier_out == Carrier::electricity) elec_terms_[n][p].push_back({x, 1.0});
      if (t.carrier_out == Carrier::hydrogen) h2_terms_[n][blk].push_back({x, 1.0});
      if (t.carrier_in == Carrier::electricity) elec_terms_[n][p].push_back({x, -1.0 / t.efficiency});
      if (t.carrier_in == Carrier::hydrogen) h2_terms_[n][blk].push_back({x, -1.0 / t.efficiency});
      if (is_smr_family(t.tech_class)) smr_terms_[n].push_back({x, 1.0});
    }
    h_.techs.push_back(std::move(v));
  }

  void add_storage(std::size_t k) {
    const auto& s = net_.storages[k];
    const auto n = node(s.node);
    const bool hydrogen = s.carrier == Carrier::hydrogen;
    const int steps = hydrogen ? blocks_ : periods_;
    const double dt = hydrogen ? net_.grid.block_duration() : net_.grid.step_duration;
    const double inv_max = s.investable ? kInf : 0.0;
    StorageVars v;
    v.new_energy = b_.add_column("sen_" + s.id, 0.0, inv_max, s.energy_capex_annualized);
    v.new_power = b_.add_column("spw_" + s.id, 0.0, inv_max, s.power_capex_annualized);
    for (int t = 0; t < steps; ++t) {
      v.charge.push_back(b_.add_column(fmt::format("sch_{}_{}", s.id, t), 0.0, kInf));
      v.discharge.push_back(b_.add_column(fmt::format("sdis_{}_{}", s.id, t), 0.0, kInf));
      v.level.push_back(b_.add_column(fmt::format("slev_{}_{}", s.id, t), 0.0, kInf));
    }
    for (int t = 0; t < steps; ++t) {
      const int prev = (t + steps - 1) % steps;
      std::vector<Term> dyn{{v.charge[t], -s.charge_eff}, {v.discharge[t], 1.0 / s.discharge_eff}};
      if (prev != t) {
        dyn.push_back({v.level[t], 1.0});
        dyn.push_back({v.level[prev], -1.0});
      }
      b_.add_row(fmt::format("sdyn_{}_{}", s.id, t), 0.0, 0.0, dyn);
      b_.add_row(fmt::format("slim_{}_{}", s.id, t), -kInf, s.initial_energy_capacity,
                 {{v.level[t], 1.0}, {v.new_energy, -1.0}});
      b_.add_row(fmt::format("schl_{}_{}", s.id, t), -kInf, s.initial_power_capacity * dt,
                 {{v.charge[t], 1.0}, {v.new_power, -dt}});
      b_.add_row(fmt::format("sdisl_{}_{}", s.id, t), -kInf, s.initial_power_capacity * dt,
                 {{v.discharge[t], 1.0}, {v.new_power, -dt}});
      auto& bal = hydrogen ? h2_terms_[n][t] : elec_terms_[n][t];
      bal.push_back({v.discharge[t], 1.0});
      bal.push_back({v.charge[t], -1.0});
    }
    h_.storages.push_back(std::move(v));
  }

  void add_corridor(std::size_t k) {
    const auto& c = net_.corridors[k];
    const auto from = node(c.from_node), to = node(c.to_node);
    const double dt = net_.grid.step_duration;
    CorridorVars v;
    v.new_capacity = b_.add_column("enew_" + c.id, 0.0, c.expandable ? kInf : 0.0, c.capex_annualized);
    for (int p = 0; p < periods_; ++p) {
      const auto f = b_.add_column(fmt::format("ef_{}_{}", c.id, p), 0.0, kInf);
      const auto r = b_.add_column(fmt::format("eb_{}_{}", c.id, p), 0.0, kInf);
      v.fwd.push_back(f);
      v.bwd.push_back(r);
      b_.add_row(fmt::format("ecap_{}_{}", c.id, p), -kInf, c.initial_capacity * dt,
                 {{f, 1.0}, {r, 1.0}, {v.new_capacity, -dt}});
      elec_terms_[from][p].push_back({f, -1.0});
      elec_terms_[from][p].push_back({r, 1.0});
      elec_terms_[to][p].push_back({f, 1.0});
      elec_terms_[to][p].push_back({r, -1.0});
    }
    h_.corridors.push_back(std::move(v));
  }

  void add_pipeline(std::size_t k) {
    const auto& l = net_.pipelines[k];
    const auto from = node(l.from_node), to = node(l.to_node);
    auto vars = retrofit::emit_retrofit_constraints(l, net_.grid, b_);
    h_.pipeline_costs.push_back(retrofit::emit_retrofit_cost(l, vars, b_));
    for (int blk = 0; blk < blocks_; ++blk) {
      h2_terms_[from][blk].push_back({vars.flow_h2_fwd[blk], -1.0});
      h2_terms_[from][blk].push_back({vars.flow_h2_bwd[blk], 1.0});
      h2_terms_[to][blk].push_back({vars.flow_h2_fwd[blk], 1.0});
      h2_terms_[to][blk].push_back({vars.flow_h2_bwd[blk], -1.0});
    }
    h_.pipelines.push_back(std::move(vars));
  }

  void add_flexible(std::size_t n, std::size_t f) {
    const auto& load = net_.nodes[n].flexible_loads[f];
    const double dt = net_.grid.step_duration;
    FlexVars v{n, f, {}};
    const std::string tag = fmt::format("{}_{}", net_.nodes[n].id, f);
    for (int p = 0; p < periods_; ++p) {
      const auto y = b_.add_column(fmt::format("flex_{}_{}", tag, p), load.min_draw * dt, load.max_draw * dt);
      v.draw.push_back(y);
      elec_terms_[n][p].push_back({y, -1.0});
    }
    for (int w = 0; w * load.window_len < periods_; ++w) {
      std::vector<Term> terms;
      for (int p = w * load.window_len; p < (w + 1) * load.window_len; ++p) terms.push_back({v.draw[p], 1.0});
      b_.add_row(fmt::format("flexw_{}_{}", tag, w), load.total_energy_per_window,
                 load.total_energy_per_window, terms);
    }
    h_.flex.push_back(std::move(v));
  }

  void add_balances() {
    const auto n_nodes = net_.nodes.size();
    h_.electricity_balance.assign(n_nodes, {});
    h_.h2_balance.assign(n_nodes, {});
    h_.smr_cap.assign(n_nodes, RowId{});
    for (std::size_t n = 0; n < n_nodes; ++n) {
      const auto& nd = net_.nodes[n];
      for (int p = 0; p < periods_; ++p) {
        const double d = nd.electricity_demand[p];
        h_.electricity_balance[n].push_back(
            b_.add_row(fmt::format("ebal_{}_{}", nd.id, p), d, d, elec_terms_[n][p]));
      }
      for (int blk = 0; blk < blocks_; ++blk) {
        const double d = nd.h2_demand[blk];
        h_.h2_balance[n].push_back(b_.add_row(fmt::format("hbal_{}_{}", nd.id, blk), d, d, h2_terms_[n][blk]));
      }
      if (!smr_terms_[n].empty()) {
        double annual = 0.0;
        for (double d : nd.h2_demand) annual += d;
        h_.smr_cap[n] = b_.add_row("smrcap_" + nd.id, -kInf, defaults::kSmrDemandShare * annual, smr_terms_[n]);
      }
    }
  }

  const NetworkModel& net_;
  ModelHandle& h_;
  lp::LpBuilder& b_;
  int periods_ = 0;
  int blocks_ = 0;
  std::vector<std::vector<std::vector<Term>>> elec_terms_;
  std::vector<std::vector<std::vector<Term>>> h2_terms_;
  std::vector<std::vector<Term>> smr_terms_;
};

}  // namespace

ModelHandle build_skeleton(const NetworkModel& network) {
  if (auto v = validate_network(network); !v.empty()) throw ValidationError(std::move(v));
  ModelHandle h;
  SkeletonBuilder(network, h).run();
  return h;
}

void apply_scenario(ModelHandle& h, const NetworkModel& network, const ScenarioConfig& scenario) {
  auto fix_zero = [&](ColId c) { h.builder.set_bounds(c, 0.0, 0.0); };
  if (!scenario.allow_p2h2) {
    for (std::size_t k = 0; k < network.technologies.size(); ++k)
      if (network.technologies[k].tech_class == TechClass::electrolyser) fix_zero(h.techs[k].new_capacity);
  }
  if (!scenario.allow_h2_storage) {
    for (std::size_t k = 0; k < network.storages.size(); ++k) {
      if (network.storages[k].carrier != Carrier::hydrogen) continue;
      fix_zero(h.storages[k].new_energy);
      fix_zero(h.storages[k].new_power);
    }
  }
  if (!scenario.allow_h2_transmission) {
    for (const auto& v : h.pipelines) {
      fix_zero(v.cap_retrofit1);
      fix_zero(v.cap_retrofit2);
      fix_zero(v.cap_new);
    }
  }
  if (!scenario.allow_e_transmission_expansion) {
    for (const auto& v : h.corridors) fix_zero(v.new_capacity);
  }
}

BuiltModel build(const NetworkModel& network, const ScenarioConfig& scenario) {
  BuiltModel m{build_skeleton(network), {}};
  apply_scenario(m.handle, network, scenario);
  m.problem = m.handle.builder.build();
  m.problem.name = "H2PLAN";
  return m;
}

lp::LpProblem build_model(const NetworkModel& network, const ScenarioConfig& scenario) {
  return build(network, scenario).problem;
}

}  // namespace h2plan::model

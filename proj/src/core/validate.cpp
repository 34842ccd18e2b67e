#include "h2plan/core/validate.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

namespace h2plan {

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string msg = fmt::format("{} invariant violation(s)", violations.size());
        for (const auto& v : violations) msg += "\n  " + v.describe();
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

class Checker {
 public:
  explicit Checker(std::vector<Violation>& out) : out_(out) {}

  void fail(const std::string& subject, std::string message) {
    out_.push_back({subject, std::move(message)});
  }
  void nonneg(const std::string& subject, std::string_view field, double v) {
    if (!(v >= 0.0) || std::isnan(v)) fail(subject, fmt::format("{} must be >= 0 (got {})", field, v));
  }
  void finite_nonneg(const std::string& subject, std::string_view field, double v) {
    if (!std::isfinite(v) || v < 0.0) fail(subject, fmt::format("{} must be finite and >= 0 (got {})", field, v));
  }
  void efficiency(const std::string& subject, std::string_view field, double v) {
    if (!(v > 0.0 && v <= 1.0)) fail(subject, fmt::format("{} must lie in (0, 1] (got {})", field, v));
  }
  void series(const std::string& subject, std::string_view field,
              const std::vector<double>& values, std::size_t expected) {
    if (values.size() != expected) {
      fail(subject, fmt::format("{} has length {} but the time grid needs {}", field,
                                values.size(), expected));
      return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i]) || values[i] < 0.0) {
        fail(subject, fmt::format("{}[{}] must be finite and >= 0 (got {})", field, i, values[i]));
        return;
      }
    }
  }

 private:
  std::vector<Violation>& out_;
};

}  // namespace

std::vector<Violation> validate_pipeline(const Pipeline& l) {
  std::vector<Violation> out;
  Checker check(out);
  const std::string subject = "pipeline " + l.id;
  if (!(l.eta1 > 0.0)) check.fail(subject, fmt::format("eta1 must be > 0 (got {})", l.eta1));
  if (!(l.eta2 > l.eta1)) {
    check.fail(subject, fmt::format("second retrofit fraction must exceed the first "
                                    "(eta2 > eta1), got eta1={} eta2={}", l.eta1, l.eta2));
  } else if (!(l.eta2 <= 1.0)) {
    check.fail(subject, fmt::format("eta2 must be <= 1 (got {})", l.eta2));
  }
  check.finite_nonneg(subject, "cap_ch4_init", l.cap_ch4_init);
  check.finite_nonneg(subject, "cap_h2_init", l.cap_h2_init);
  check.finite_nonneg(subject, "capex_retrofit1", l.capex_retrofit1);
  check.finite_nonneg(subject, "capex_retrofit2", l.capex_retrofit2);
  check.finite_nonneg(subject, "capex_new", l.capex_new);
  return out;
}

std::vector<Violation> validate_network(const NetworkModel& model) {
  std::vector<Violation> out;
  Checker check(out);
  const auto& g = model.grid;

  bool grid_ok = true;
  if (g.horizon_steps < 1) {
    check.fail("grid", fmt::format("horizon_steps must be >= 1 (got {})", g.horizon_steps));
    grid_ok = false;
  }
  if (!(g.step_duration > 0.0) || !std::isfinite(g.step_duration)) {
    check.fail("grid", fmt::format("step_duration must be > 0 (got {})", g.step_duration));
  }
  if (g.h2_block_len < 1) {
    check.fail("grid", fmt::format("h2_block_len must be >= 1 (got {})", g.h2_block_len));
    grid_ok = false;
  }
  if (grid_ok && g.horizon_steps % g.h2_block_len != 0) {
    check.fail("grid", fmt::format("horizon_steps {} is not a multiple of h2_block_len {}",
                                   g.horizon_steps, g.h2_block_len));
  }
  if (!(g.operational_weight > 0.0) || !std::isfinite(g.operational_weight)) {
    check.fail("grid", fmt::format("operational_weight must be > 0 (got {})", g.operational_weight));
  }
  const auto periods = static_cast<std::size_t>(std::max(g.horizon_steps, 0));
  const auto blocks = static_cast<std::size_t>(std::max(g.num_blocks(), 0));

  std::set<std::string> node_ids;
  for (const auto& n : model.nodes) {
    const std::string subject = "node " + n.id;
    if (n.id.empty()) check.fail("node", "empty id");
    if (!node_ids.insert(n.id).second) check.fail(subject, "duplicate id");
    check.series(subject, "electricity_demand", n.electricity_demand, periods);
    check.series(subject, "h2_demand", n.h2_demand, blocks);
    for (std::size_t k = 0; k < n.flexible_loads.size(); ++k) {
      const auto& f = n.flexible_loads[k];
      const std::string fs = fmt::format("{} flexible load {}", subject, k);
      if (f.min_draw > f.max_draw) {
        check.fail(fs, fmt::format("min_draw {} exceeds max_draw {}", f.min_draw, f.max_draw));
      }
      if (f.window_len < 1) {
        check.fail(fs, fmt::format("window_len must be >= 1 (got {})", f.window_len));
        continue;
      }
      if (g.horizon_steps >= 1 && g.horizon_steps % f.window_len != 0) {
        check.fail(fs, fmt::format("horizon_steps {} is not a multiple of window_len {}",
                                   g.horizon_steps, f.window_len));
      }
      const double span = f.window_len * g.step_duration;
      const double lo = span * f.min_draw, hi = span * f.max_draw;
      if (f.min_draw <= f.max_draw &&
          (f.total_energy_per_window < lo - 1e-9 * std::max(1.0, std::abs(lo)) ||
           f.total_energy_per_window > hi + 1e-9 * std::max(1.0, std::abs(hi)))) {
        check.fail(fs, fmt::format("energy per window {} outside reachable range [{}, {}]",
                                   f.total_energy_per_window, lo, hi));
      }
    }
  }

  std::set<std::string> tech_ids;
  for (const auto& t : model.technologies) {
    const std::string subject = "technology " + t.id;
    if (t.id.empty()) check.fail("technology", "empty id");
    if (!tech_ids.insert(t.id).second) check.fail(subject, "duplicate id");
    if (!node_ids.contains(t.node)) check.fail(subject, "unknown node " + t.node);
    if (t.carrier_out != Carrier::electricity && t.carrier_out != Carrier::hydrogen) {
      check.fail(subject, "output carrier must be electricity or hydrogen");
    }
    if (t.carrier_in == t.carrier_out) check.fail(subject, "input and output carrier coincide");
    switch (t.tech_class) {
      case TechClass::smr:
      case TechClass::smr_ccs54:
      case TechClass::smr_ccs89:
        if (t.carrier_out != Carrier::hydrogen) check.fail(subject, "SMR must produce hydrogen");
        break;
      case TechClass::electrolyser:
        if (t.carrier_in != Carrier::electricity || t.carrier_out != Carrier::hydrogen)
          check.fail(subject, "electrolyser must convert electricity to hydrogen");
        break;
      case TechClass::hydrogen_to_power:
        if (t.carrier_in != Carrier::hydrogen || t.carrier_out != Carrier::electricity)
          check.fail(subject, "hydrogen-to-power must convert hydrogen to electricity");
        break;
      case TechClass::vre:
      case TechClass::conventional:
        if (t.carrier_out != Carrier::electricity)
          check.fail(subject, "power plant must produce electricity");
        break;
    }
    check.efficiency(subject, "efficiency", t.efficiency);
    check.finite_nonneg(subject, "emission_factor", t.emission_factor);
    check.finite_nonneg(subject, "ccs_capture_factor", t.ccs_capture_factor);
    check.finite_nonneg(subject, "initial_capacity", t.initial_capacity);
    check.nonneg(subject, "max_new_capacity", t.max_new_capacity);
    check.finite_nonneg(subject, "capex_annualized", t.capex_annualized);
    check.finite_nonneg(subject, "fixed_om", t.fixed_om);
    if (!std::isfinite(t.variable_cost_extra)) check.fail(subject, "variable_cost_extra must be finite");
    if (!t.fuel.empty() && !model.prices.fuel_prices.contains(t.fuel)) {
      check.fail(subject, "no price for fuel " + t.fuel);
    }
    if (!t.availability.empty()) {
      if (t.availability.size() != periods) {
        check.fail(subject, fmt::format("availability has length {} but the time grid needs {}",
                                        t.availability.size(), periods));
      } else {
        for (std::size_t i = 0; i < periods; ++i) {
          if (!(t.availability[i] >= 0.0 && t.availability[i] <= 1.0)) {
            check.fail(subject, fmt::format("availability[{}] must lie in [0, 1] (got {})", i,
                                            t.availability[i]));
            break;
          }
        }
      }
    }
  }

  std::set<std::string> storage_ids;
  for (const auto& s : model.storages) {
    const std::string subject = "storage " + s.id;
    if (!storage_ids.insert(s.id).second) check.fail(subject, "duplicate id");
    if (!node_ids.contains(s.node)) check.fail(subject, "unknown node " + s.node);
    if (s.carrier != Carrier::electricity && s.carrier != Carrier::hydrogen) {
      check.fail(subject, "carrier must be electricity or hydrogen");
    }
    check.efficiency(subject, "charge_eff", s.charge_eff);
    check.efficiency(subject, "discharge_eff", s.discharge_eff);
    check.finite_nonneg(subject, "energy_capex_annualized", s.energy_capex_annualized);
    check.finite_nonneg(subject, "power_capex_annualized", s.power_capex_annualized);
    check.finite_nonneg(subject, "initial_energy_capacity", s.initial_energy_capacity);
    check.finite_nonneg(subject, "initial_power_capacity", s.initial_power_capacity);
  }

  std::set<std::string> pipeline_ids;
  for (const auto& l : model.pipelines) {
    const std::string subject = "pipeline " + l.id;
    if (!pipeline_ids.insert(l.id).second) check.fail(subject, "duplicate id");
    if (!node_ids.contains(l.from_node)) check.fail(subject, "unknown node " + l.from_node);
    if (!node_ids.contains(l.to_node)) check.fail(subject, "unknown node " + l.to_node);
    if (l.from_node == l.to_node) check.fail(subject, "connects a node to itself");
    auto own = validate_pipeline(l);
    out.insert(out.end(), own.begin(), own.end());
  }

  std::set<std::string> corridor_ids;
  for (const auto& c : model.corridors) {
    const std::string subject = "corridor " + c.id;
    if (!corridor_ids.insert(c.id).second) check.fail(subject, "duplicate id");
    if (!node_ids.contains(c.from_node)) check.fail(subject, "unknown node " + c.from_node);
    if (!node_ids.contains(c.to_node)) check.fail(subject, "unknown node " + c.to_node);
    if (c.from_node == c.to_node) check.fail(subject, "connects a node to itself");
    check.finite_nonneg(subject, "initial_capacity", c.initial_capacity);
    check.finite_nonneg(subject, "capex_annualized", c.capex_annualized);
  }

  for (const auto& [fuel, price] : model.prices.fuel_prices) {
    check.finite_nonneg("price " + fuel, "price", price);
  }
  check.finite_nonneg("price co2", "price", model.prices.co2_price);
  return out;
}

}  // namespace h2plan

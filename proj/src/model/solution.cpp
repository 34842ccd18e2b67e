#include "h2plan/model/solution.hpp"

#include <algorithm>
#include <cmath>

namespace h2plan::model {

SolveError::SolveError(lp::SolveStatus status, const std::string& scenario)
    : std::runtime_error("scenario " + scenario + " is not optimal: " + lp::to_string(status)),
      status_(status) {}

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

class Extractor {
 public:
  Extractor(const lp::LpProblem& p, const lp::LpSolution& s) : p_(p), s_(s) {}

  double col(lp::ColId c) const {
    double v = s_.primal[c.index];
    const double lo = p_.col_lower[c.index], up = p_.col_upper[c.index];
    if (std::isfinite(lo) && (v < lo || near(v, lo))) v = lo;
    if (std::isfinite(up) && (v > up || near(v, up))) v = up;
    return v;
  }
  std::vector<double> cols(const std::vector<lp::ColId>& ids) const {
    std::vector<double> out;
    out.reserve(ids.size());
    for (auto c : ids) out.push_back(col(c));
    return out;
  }
  double dual(lp::RowId r) const { return s_.row_dual[r.index]; }
  double row_upper(lp::RowId r) const { return p_.row_upper[r.index]; }

 private:
  const lp::LpProblem& p_;
  const lp::LpSolution& s_;
};

}  // namespace

PlanningResult extract_solution(const lp::LpProblem& problem, const lp::LpSolution& raw,
                                const ModelHandle& h, const NetworkModel& net,
                                const ScenarioConfig& scenario) {
  if (raw.status != lp::SolveStatus::optimal) throw SolveError(raw.status, scenario.name);
  Extractor x(problem, raw);
  PlanningResult r;
  r.scenario = scenario.name;
  r.objective = raw.objective;
  r.dual_objective = raw.dual_objective;
  r.iterations = raw.iterations;

  for (const auto& v : h.techs) r.techs.push_back({x.col(v.new_capacity), x.cols(v.output)});
  for (const auto& v : h.storages) {
    r.storages.push_back({x.col(v.new_energy), x.col(v.new_power), x.cols(v.charge), x.cols(v.discharge),
                          x.cols(v.level)});
  }
  for (const auto& v : h.corridors) r.corridors.push_back({x.col(v.new_capacity), x.cols(v.fwd), x.cols(v.bwd)});
  for (std::size_t k = 0; k < h.pipelines.size(); ++k) {
    const auto& v = h.pipelines[k];
    const auto& l = net.pipelines[k];
    PipelineResult p;
    p.cap_retrofit1 = x.col(v.cap_retrofit1);
    // The first-retrofit limit is a row, so snap to it like a column bound.
    if (near(p.cap_retrofit1, x.row_upper(v.first_limit))) p.cap_retrofit1 = x.row_upper(v.first_limit);
    p.cap_retrofit2 = x.col(v.cap_retrofit2);
    p.cap_new = x.col(v.cap_new);
    p.ch4_capacity = retrofit::residual_ch4_capacity(l, p.cap_retrofit1);
    p.h2_fwd = x.cols(v.flow_h2_fwd);
    p.h2_bwd = x.cols(v.flow_h2_bwd);
    p.ch4_flow = x.cols(v.flow_ch4);
    r.pipelines.push_back(std::move(p));
  }
  for (const auto& v : h.flex) r.flex_draw.push_back(x.cols(v.draw));

  const double weight = net.grid.operational_weight;
  for (const auto& rows : h.electricity_balance) {
    std::vector<double> prices;
    for (auto row : rows) prices.push_back(x.dual(row) / weight);
    r.electricity_price.push_back(std::move(prices));
  }
  for (const auto& rows : h.h2_balance) {
    std::vector<double> prices;
    for (auto row : rows) prices.push_back(x.dual(row) / weight);
    r.h2_price.push_back(std::move(prices));
  }
  return r;
}

double recompute_objective(const PlanningResult& r, const NetworkModel& net) {
  const double weight = net.grid.operational_weight;
  double total = 0.0;
  for (std::size_t k = 0; k < net.technologies.size(); ++k) {
    const auto& t = net.technologies[k];
    const auto& res = r.techs[k];
    double energy = 0.0;
    for (double v : res.output) energy += v;
    total += (t.capex_annualized + t.fixed_om) * res.new_capacity + t.fixed_om * t.initial_capacity +
             weight * variable_cost(t, net.prices) * energy;
  }
  for (std::size_t k = 0; k < net.storages.size(); ++k) {
    const auto& s = net.storages[k];
    total += s.energy_capex_annualized * r.storages[k].new_energy + s.power_capex_annualized * r.storages[k].new_power;
  }
  for (std::size_t k = 0; k < net.corridors.size(); ++k) {
    total += net.corridors[k].capex_annualized * r.corridors[k].new_capacity;
  }
  for (std::size_t k = 0; k < net.pipelines.size(); ++k) {
    const auto& p = r.pipelines[k];
    total += retrofit::retrofit_cost(net.pipelines[k], p.cap_retrofit1, p.cap_retrofit2, p.cap_new);
  }
  return total;
}

}  // namespace h2plan::model

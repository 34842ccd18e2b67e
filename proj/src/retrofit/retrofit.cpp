#include "h2plan/retrofit/retrofit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "h2plan/core/validate.hpp"

namespace h2plan::retrofit {

double delta_capex(double eta1, double eta2, double c1, double c2) {
  if (!(eta1 > 0.0) || !(eta2 > eta1)) {
    throw std::domain_error(fmt::format("retrofit fractions need 0 < eta1 < eta2 (got {}, {})", eta1, eta2));
  }
  return (eta2 * c2 - eta1 * c1) / (eta2 - eta1);
}

RetrofitVars emit_retrofit_constraints(const Pipeline& l, const TimeGrid& grid, lp::LpBuilder& sink) {
  if (auto v = validate_pipeline(l); !v.empty()) throw ValidationError(std::move(v));
  const double dt = grid.block_duration();
  const int blocks = grid.num_blocks();
  const double inf = lp::kInf;

  RetrofitVars v;
  v.cap_retrofit1 = sink.add_column("p1_" + l.id, 0.0, inf);
  v.cap_retrofit2 = sink.add_column("p2_" + l.id, 0.0, inf);
  v.cap_new = sink.add_column("pn_" + l.id, 0.0, l.new_buildable ? inf : 0.0);

  v.first_limit = sink.add_row("ret1_" + l.id, -inf, l.eta1 * l.cap_ch4_init, {{v.cap_retrofit1, 1.0}});
  v.coupling = sink.add_row("ret2_" + l.id, -inf, 0.0,
                            {{v.cap_retrofit2, 1.0}, {v.cap_retrofit1, -(l.eta2 - l.eta1) / l.eta1}});

  for (int b = 0; b < blocks; ++b) {
    const auto fwd = sink.add_column(fmt::format("fh2f_{}_{}", l.id, b), 0.0, inf);
    const auto bwd = sink.add_column(fmt::format("fh2b_{}_{}", l.id, b), 0.0, inf);
    const auto ch4 = sink.add_column(fmt::format("fch4_{}_{}", l.id, b), 0.0, inf);
    v.flow_h2_fwd.push_back(fwd);
    v.flow_h2_bwd.push_back(bwd);
    v.flow_ch4.push_back(ch4);
    v.h2_limit.push_back(sink.add_row(fmt::format("caph2_{}_{}", l.id, b), -inf, l.cap_h2_init * dt,
                                      {{fwd, 1.0},
                                       {bwd, 1.0},
                                       {v.cap_retrofit1, -dt},
                                       {v.cap_retrofit2, -dt},
                                       {v.cap_new, -dt}}));
    v.ch4_limit.push_back(sink.add_row(fmt::format("capch4_{}_{}", l.id, b), -inf, l.cap_ch4_init * dt,
                                       {{ch4, 1.0}, {v.cap_retrofit1, dt / l.eta1}}));
  }
  return v;
}

RetrofitCost emit_retrofit_cost(const Pipeline& l, const RetrofitVars& vars, lp::LpBuilder& sink) {
  RetrofitCost c;
  c.delta_c2 = delta_capex(l.eta1, l.eta2, l.capex_retrofit1, l.capex_retrofit2);
  c.c1 = l.capex_retrofit1;
  c.c_new = l.capex_new;
  sink.add_objective(vars.cap_retrofit1, c.c1);
  sink.add_objective(vars.cap_retrofit2, c.delta_c2);
  sink.add_objective(vars.cap_new, c.c_new);
  return c;
}

double retrofit_cost(const Pipeline& l, double p1, double p2, double p_new) {
  return p1 * l.capex_retrofit1 + p2 * delta_capex(l.eta1, l.eta2, l.capex_retrofit1, l.capex_retrofit2) +
         p_new * l.capex_new;
}

double residual_ch4_capacity(const Pipeline& l, double p1) {
  const double limit = l.eta1 * l.cap_ch4_init;
  if (p1 >= limit) return 0.0;
  return std::max(0.0, (limit - p1) / l.eta1);
}

}  // namespace h2plan::retrofit

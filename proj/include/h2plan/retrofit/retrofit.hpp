#pragma once

#include <vector>

#include "h2plan/core/types.hpp"
#include "h2plan/lp/problem.hpp"

namespace h2plan::retrofit {

/// Extra annualized cost per MW of H2 capacity for moving from the first to
/// the second retrofit level: (eta2*c2 - eta1*c1) / (eta2 - eta1).
/// Throws std::domain_error unless 0 < eta1 < eta2.
double delta_capex(double eta1, double eta2, double c1, double c2);

/// Columns and rows registered for one pipeline.
struct RetrofitVars {
  lp::ColId cap_retrofit1;  // MW of H2 capacity from the first retrofit
  lp::ColId cap_retrofit2;  // MW added by the second retrofit
  lp::ColId cap_new;        // MW of newly built H2 pipeline
  std::vector<lp::ColId> flow_h2_fwd;  // MWh per block, from -> to
  std::vector<lp::ColId> flow_h2_bwd;  // MWh per block, to -> from
  std::vector<lp::ColId> flow_ch4;     // MWh per block

  lp::RowId first_limit;              // p1 <= eta1 * P_ch4
  lp::RowId coupling;                 // p2 <= (eta2 - eta1)/eta1 * p1
  std::vector<lp::RowId> h2_limit;    // per block
  std::vector<lp::RowId> ch4_limit;   // per block
};

struct RetrofitCost {
  double delta_c2 = 0.0;  // €/MW/yr
  /// Objective coefficients added for (cap_retrofit1, cap_retrofit2, cap_new).
  double c1 = 0.0;
  double c_new = 0.0;
};

/// Registers the retrofit variables and capacity rows of `pipeline` on
/// `sink`. Throws ValidationError when the pipeline breaks its invariants.
RetrofitVars emit_retrofit_constraints(const Pipeline& pipeline, const TimeGrid& grid,
                                       lp::LpBuilder& sink);

/// Adds p1*C1 + p2*dC2 + pn*C_new to the objective of `sink`.
RetrofitCost emit_retrofit_cost(const Pipeline& pipeline, const RetrofitVars& vars,
                                lp::LpBuilder& sink);

/// Total retrofit and new-build cost for given capacity levels.
double retrofit_cost(const Pipeline& pipeline, double p1, double p2, double p_new);

/// Methane capacity (MW) left after the first retrofit withdrew p1/eta1 of
/// the corridor. A first retrofit at its limit leaves exactly 0.
double residual_ch4_capacity(const Pipeline& pipeline, double p1);

}  // namespace h2plan::retrofit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "h2plan/lp/problem.hpp"

namespace h2plan::lp {

enum class SolveStatus {
  optimal,
  infeasible,
  unbounded,
  iteration_limit,
  numerical_failure,
};

std::string to_string(SolveStatus status);

enum class PricingRule {
  devex,    // reference-framework approximation of steepest edge
  dantzig,  // most negative reduced cost
  bland,    // lowest eligible index; always terminates
};

/// Numerical settings shared by every solve.
struct Tolerances {
  double primal_feasibility = 1e-7;
  double dual_feasibility = 1e-7;
  double zero_pivot = 1e-10;
};

struct SolverOptions {
  Tolerances tol;
  std::int64_t iteration_limit = 2'000'000;
  PricingRule pricing = PricingRule::devex;
  int refactor_interval = 100;
  /// Consecutive non-improving iterations before switching to Bland's rule.
  int stall_limit = 2000;
};

struct LpSolution {
  SolveStatus status = SolveStatus::numerical_failure;
  std::vector<double> primal;        // per column
  std::vector<double> row_activity;  // A x
  std::vector<double> row_dual;      // d objective / d row bound
  std::vector<double> reduced_cost;  // per column
  double objective = 0.0;
  double dual_objective = 0.0;
  std::int64_t iterations = 0;
  /// Final basis: true for each basic column followed by each basic row logical.
  std::vector<bool> basic;
  std::string diagnostics;

  // Certificates computed on the returned point, in problem scale.
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

/// Bounded-variable primal simplex. Deterministic for identical input and
/// options. Throws std::invalid_argument when problem.check() reports issues.
LpSolution solve(const LpProblem& problem, const SolverOptions& options = {});

/// Largest violation of row and column bounds at x.
double primal_infeasibility(const LpProblem& problem, std::span<const double> x);

}  // namespace h2plan::lp

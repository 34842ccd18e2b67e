#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "h2plan/lp/solver.hpp"
#include "lu.hpp"

namespace h2plan::lp {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::iteration_limit: return "iteration-limit";
    case SolveStatus::numerical_failure: return "numerical-failure";
  }
  return "unknown";
}

double primal_infeasibility(const LpProblem& problem, std::span<const double> x) {
  double worst = 0.0;
  for (int j = 0; j < problem.num_cols(); ++j) {
    worst = std::max({worst, problem.col_lower[j] - x[j], x[j] - problem.col_upper[j]});
  }
  const auto act = row_activity(problem, x);
  for (int i = 0; i < problem.num_rows(); ++i) {
    worst = std::max({worst, problem.row_lower[i] - act[i], act[i] - problem.row_upper[i]});
  }
  return worst;
}

namespace {

enum class VarState : unsigned char { basic, at_lower, at_upper, free_zero };

// Product-form update B_new^{-1} = E B_old^{-1}; alpha = B_old^{-1} a_q.
struct Eta {
  int pivot_pos;
  double pivot;
  std::vector<int> index;
  std::vector<double> value;
};

using Vec = std::vector<double>;

// Internal form: minimize cost'z over z = (x, r) subject to A x - r = 0 and
// lo <= z <= up. Variables n..n+m-1 are the row logicals r with column -e_i.
class PrimalSimplex {
 public:
  PrimalSimplex(const LpProblem& p, const SolverOptions& opt)
      : p_(p), opt_(opt), n_(p.num_cols()), m_(p.num_rows()), total_(n_ + m_) {
    const double sign = p.sense == Sense::maximize ? -1.0 : 1.0;
    lo_.resize(total_);
    up_.resize(total_);
    cost_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = p.col_lower[j];
      up_[j] = p.col_upper[j];
      cost_[j] = sign * p.objective[j];
    }
    for (int i = 0; i < m_; ++i) {
      lo_[n_ + i] = p.row_lower[i];
      up_[n_ + i] = p.row_upper[i];
    }
    row_start_.assign(m_ + 1, 0);
    for (int i : p.matrix.index) ++row_start_[i + 1];
    for (int i = 0; i < m_; ++i) row_start_[i + 1] += row_start_[i];
    row_col_.resize(p.matrix.nnz());
    row_val_.resize(p.matrix.nnz());
    {
      std::vector<std::size_t> fill(row_start_.begin(), row_start_.end() - 1);
      for (int j = 0; j < n_; ++j) {
        for (auto k = p.matrix.start[j]; k < p.matrix.start[j + 1]; ++k) {
          const auto at = fill[p.matrix.index[k]]++;
          row_col_[at] = j;
          row_val_[at] = p.matrix.value[k];
        }
      }
    }
    state_.resize(total_);
    x_.assign(total_, 0.0);
    pos_.assign(total_, -1);
    head_.resize(m_);
    weight_.assign(total_, 1.0);
    for (int j = 0; j < n_; ++j) {
      if (std::isfinite(lo_[j])) {
        state_[j] = VarState::at_lower;
        x_[j] = lo_[j];
      } else if (std::isfinite(up_[j])) {
        state_[j] = VarState::at_upper;
        x_[j] = up_[j];
      } else {
        state_[j] = VarState::free_zero;
      }
    }
    for (int i = 0; i < m_; ++i) {
      state_[n_ + i] = VarState::basic;
      head_[i] = n_ + i;
      pos_[n_ + i] = i;
    }
  }

  LpSolution run();

 private:
  template <typename F>
  void for_column(int j, F&& f) const {
    if (j < n_) {
      const auto& a = p_.matrix;
      for (auto k = a.start[j]; k < a.start[j + 1]; ++k) f(a.index[k], a.value[k]);
    } else {
      f(j - n_, -1.0);
    }
  }

  double dot_column(const Vec& v, int j) const {
    double s = 0.0;
    for_column(j, [&](int i, double a) { s += v[i] * a; });
    return s;
  }

  bool refactor();
  void recompute_basic_values();
  void ftran(Vec& v) const;
  void btran(Vec& v) const;
  double infeasibility(int var) const;

  const LpProblem& p_;
  const SolverOptions& opt_;
  int n_, m_, total_;
  std::vector<double> lo_, up_, cost_;
  std::vector<std::size_t> row_start_;
  std::vector<int> row_col_;
  std::vector<double> row_val_;
  std::vector<VarState> state_;
  std::vector<double> x_;
  std::vector<int> pos_;
  std::vector<int> head_;
  std::vector<double> weight_;
  SparseLu lu_;
  std::vector<Eta> etas_;
  std::size_t eta_nnz_ = 0;
  std::string diagnostics_;
};

bool PrimalSimplex::refactor() {
  etas_.clear();
  eta_nnz_ = 0;
  if (m_ == 0) return true;
  std::vector<SparseLu::Column> cols(m_);
  for (int c = 0; c < m_; ++c) {
    for_column(head_[c], [&](int i, double a) { cols[c].emplace_back(i, a); });
  }
  if (!lu_.factor(m_, cols)) {
    diagnostics_ = "basis factorization failed: " + lu_.error();
    return false;
  }
  return true;
}

void PrimalSimplex::ftran(Vec& v) const {
  if (m_ == 0) return;
  lu_.ftran(v);
  for (const auto& e : etas_) {
    const double vr = v[e.pivot_pos] / e.pivot;
    v[e.pivot_pos] = vr;
    if (vr == 0.0) continue;
    for (std::size_t k = 0; k < e.index.size(); ++k) v[e.index[k]] -= e.value[k] * vr;
  }
}

void PrimalSimplex::btran(Vec& v) const {
  if (m_ == 0) return;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double s = v[it->pivot_pos];
    for (std::size_t k = 0; k < it->index.size(); ++k) s -= it->value[k] * v[it->index[k]];
    v[it->pivot_pos] = s / it->pivot;
  }
  lu_.btran(v);
}

void PrimalSimplex::recompute_basic_values() {
  if (m_ == 0) return;
  Vec rhs(m_, 0.0);
  for (int j = 0; j < total_; ++j) {
    if (state_[j] == VarState::basic || x_[j] == 0.0) continue;
    const double xj = x_[j];
    for_column(j, [&](int i, double a) { rhs[i] -= a * xj; });
  }
  ftran(rhs);
  for (int c = 0; c < m_; ++c) x_[head_[c]] = rhs[c];
}

double PrimalSimplex::infeasibility(int var) const {
  const double v = x_[var];
  if (v < lo_[var]) return lo_[var] - v;
  if (v > up_[var]) return v - up_[var];
  return 0.0;
}

LpSolution PrimalSimplex::run() {
  LpSolution sol;
  const double ftol = opt_.tol.primal_feasibility;
  const double dtol = opt_.tol.dual_feasibility;
  const double ztol = opt_.tol.zero_pivot;

  std::int64_t iter = 0;
  int since_refactor = 0;
  int stalled = 0;
  bool bland = opt_.pricing == PricingRule::bland;
  SolveStatus status = SolveStatus::numerical_failure;

  if (!refactor()) {
    sol.status = SolveStatus::numerical_failure;
    sol.diagnostics = diagnostics_;
    return sol;
  }
  recompute_basic_values();

  Vec y(m_, 0.0), alpha(m_, 0.0), rho(m_, 0.0);
  std::vector<double> d(total_, 0.0);
  bool d_valid = false;
  // Pivot row alpha_r over the nonbasic variables it touches.
  std::vector<double> arow(total_, 0.0);
  std::vector<int> touched;
  std::vector<char> is_touched(total_, 0);

  while (true) {
    // Long eta files make every solve slow, so refactor early when they grow.
    if (since_refactor >= opt_.refactor_interval ||
        (since_refactor > 0 && eta_nnz_ > 16 * static_cast<std::size_t>(m_) + 1000)) {
      if (!refactor()) break;
      recompute_basic_values();
      since_refactor = 0;
      d_valid = false;
    }

    bool phase1 = false;
    for (int c = 0; c < m_; ++c) {
      if (infeasibility(head_[c]) > ftol) {
        phase1 = true;
        break;
      }
    }

    if (phase1 || bland || !d_valid) {
      for (int c = 0; c < m_; ++c) {
        const int v = head_[c];
        if (phase1) {
          y[c] = x_[v] < lo_[v] - ftol ? -1.0 : (x_[v] > up_[v] + ftol ? 1.0 : 0.0);
        } else {
          y[c] = cost_[v];
        }
      }
      btran(y);
      for (int j = 0; j < total_; ++j) {
        if (state_[j] == VarState::basic) continue;
        d[j] = (phase1 ? 0.0 : cost_[j]) - dot_column(y, j);
      }
      d_valid = !phase1 && !bland;
    }

    // Pricing.
    int enter = -1;
    double enter_dir = 0.0;
    double best = 0.0;
    for (int j = 0; j < total_; ++j) {
      const auto st = state_[j];
      if (st == VarState::basic || lo_[j] == up_[j]) continue;
      const double dj = d[j];
      double dir = 0.0;
      if (st == VarState::at_lower && dj < -dtol) dir = 1.0;
      else if (st == VarState::at_upper && dj > dtol) dir = -1.0;
      else if (st == VarState::free_zero && std::abs(dj) > dtol) dir = dj < 0 ? 1.0 : -1.0;
      if (dir == 0.0) continue;
      if (bland) {
        enter = j;
        enter_dir = dir;
        break;
      }
      double score = opt_.pricing == PricingRule::dantzig ? std::abs(dj) : dj * dj / weight_[j];
      if (score > best) {
        best = score;
        enter = j;
        enter_dir = dir;
      }
    }

    if (enter < 0) {
      if (since_refactor > 0) {
        // Confirm termination on a fresh factorization.
        if (!refactor()) break;
        recompute_basic_values();
        since_refactor = 0;
        d_valid = false;
        continue;
      }
      status = phase1 ? SolveStatus::infeasible : SolveStatus::optimal;
      break;
    }
    if (iter >= opt_.iteration_limit) {
      status = SolveStatus::iteration_limit;
      break;
    }

    std::fill(alpha.begin(), alpha.end(), 0.0);
    for_column(enter, [&](int i, double a) { alpha[i] = a; });
    ftran(alpha);

    // Ratio test. Basic variable at position c moves at rate -dir * alpha[c].
    auto target_of = [&](int c, double rate, double& target) {
      const int v = head_[c];
      const double xv = x_[v];
      if (phase1 && xv < lo_[v] - ftol) {
        if (rate <= 0) return false;
        target = lo_[v];
        return true;
      }
      if (phase1 && xv > up_[v] + ftol) {
        if (rate >= 0) return false;
        target = up_[v];
        return true;
      }
      target = rate < 0 ? lo_[v] : up_[v];
      return std::isfinite(target);
    };

    int leave_pos = -1;
    double theta = kInf;
    double leave_target = 0.0;
    if (bland) {
      int leave_var = total_;
      for (int c = 0; c < m_; ++c) {
        if (std::abs(alpha[c]) <= ztol) continue;
        const double rate = -enter_dir * alpha[c];
        double target;
        if (!target_of(c, rate, target)) continue;
        const double ratio = std::max(0.0, (target - x_[head_[c]]) / rate);
        if (ratio < theta || (ratio == theta && head_[c] < leave_var)) {
          theta = ratio;
          leave_pos = c;
          leave_var = head_[c];
          leave_target = target;
        }
      }
    } else {
      double relaxed = kInf;
      for (int c = 0; c < m_; ++c) {
        if (std::abs(alpha[c]) <= ztol) continue;
        const double rate = -enter_dir * alpha[c];
        double target;
        if (!target_of(c, rate, target)) continue;
        const double slack = rate > 0 ? target + ftol - x_[head_[c]] : target - ftol - x_[head_[c]];
        relaxed = std::min(relaxed, std::max(0.0, slack / rate));
      }
      if (std::isfinite(relaxed)) {
        double best_pivot = 0.0;
        int leave_var = total_;
        for (int c = 0; c < m_; ++c) {
          if (std::abs(alpha[c]) <= ztol) continue;
          const double rate = -enter_dir * alpha[c];
          double target;
          if (!target_of(c, rate, target)) continue;
          const double ratio = (target - x_[head_[c]]) / rate;
          if (ratio > relaxed) continue;
          const double mag = std::abs(alpha[c]);
          if (mag > best_pivot || (mag == best_pivot && head_[c] < leave_var)) {
            best_pivot = mag;
            leave_pos = c;
            leave_var = head_[c];
            leave_target = target;
            theta = std::max(0.0, ratio);
          }
        }
      }
    }

    const double range = up_[enter] - lo_[enter];
    const bool flip = std::isfinite(range) && (leave_pos < 0 || range <= theta);
    if (leave_pos < 0 && !flip) {
      if (phase1) {
        diagnostics_ = fmt::format("no blocking variable in phase 1 at iteration {}", iter);
        status = SolveStatus::numerical_failure;
      } else {
        status = SolveStatus::unbounded;
      }
      break;
    }
    if (flip) theta = range;

    const double gain = theta * std::abs(d[enter]);
    if (gain <= 1e-12) {
      if (++stalled > opt_.stall_limit) bland = true;
    } else {
      stalled = 0;
      if (opt_.pricing != PricingRule::bland) bland = false;
    }

    // Step.
    if (theta != 0.0) {
      x_[enter] += enter_dir * theta;
      for (int c = 0; c < m_; ++c) {
        if (alpha[c] != 0.0) x_[head_[c]] -= enter_dir * theta * alpha[c];
      }
    }
    ++iter;

    if (flip) {
      state_[enter] = enter_dir > 0 ? VarState::at_upper : VarState::at_lower;
      x_[enter] = enter_dir > 0 ? up_[enter] : lo_[enter];
      continue;
    }

    const int leave = head_[leave_pos];
    const double pivot = alpha[leave_pos];

    const bool devex = !bland && opt_.pricing == PricingRule::devex;
    const bool update_d = d_valid && !phase1;
    if (devex || update_d) {
      std::fill(rho.begin(), rho.end(), 0.0);
      rho[leave_pos] = 1.0;
      btran(rho);
      for (int i = 0; i < m_; ++i) {
        const double ri = rho[i];
        if (ri == 0.0) continue;
        for (auto k = row_start_[i]; k < row_start_[i + 1]; ++k) {
          const int j = row_col_[k];
          if (!is_touched[j]) {
            is_touched[j] = 1;
            touched.push_back(j);
          }
          arow[j] += ri * row_val_[k];
        }
        const int logical = n_ + i;
        is_touched[logical] = 1;
        touched.push_back(logical);
        arow[logical] = -ri;
      }
      if (devex) {
        const double wq = weight_[enter];
        double wmax = 0.0;
        for (int j : touched) {
          if (state_[j] == VarState::basic || j == enter || lo_[j] == up_[j]) continue;
          const double ratio = arow[j] / pivot;
          if (ratio == 0.0) continue;
          weight_[j] = std::max(weight_[j], ratio * ratio * wq);
          wmax = std::max(wmax, weight_[j]);
        }
        weight_[leave] = std::max(wq / (pivot * pivot), 1.0);
        if (wmax > 1e8) std::fill(weight_.begin(), weight_.end(), 1.0);
      }
      if (update_d) {
        const double theta_d = d[enter] / pivot;
        for (int j : touched) {
          if (state_[j] != VarState::basic) d[j] -= theta_d * arow[j];
        }
        d[leave] = -theta_d;
        d[enter] = 0.0;
      }
      for (int j : touched) {
        arow[j] = 0.0;
        is_touched[j] = 0;
      }
      touched.clear();
    } else {
      d_valid = false;
    }

    x_[leave] = leave_target;
    state_[leave] = leave_target == lo_[leave] ? VarState::at_lower : VarState::at_upper;
    pos_[leave] = -1;
    head_[leave_pos] = enter;
    pos_[enter] = leave_pos;
    state_[enter] = VarState::basic;

    Eta eta;
    eta.pivot_pos = leave_pos;
    eta.pivot = pivot;
    for (int c = 0; c < m_; ++c) {
      if (c != leave_pos && std::abs(alpha[c]) > 1e-14) {
        eta.index.push_back(c);
        eta.value.push_back(alpha[c]);
      }
    }
    eta_nnz_ += eta.index.size() + 1;
    etas_.push_back(std::move(eta));
    ++since_refactor;
  }

  sol.status = status;
  sol.iterations = iter;
  sol.diagnostics = diagnostics_;
  sol.primal.assign(x_.begin(), x_.begin() + n_);
  sol.row_activity = row_activity(p_, sol.primal);
  sol.objective = objective_value(p_, sol.primal);
  sol.basic.resize(total_);
  for (int j = 0; j < total_; ++j) sol.basic[j] = state_[j] == VarState::basic;
  if (status != SolveStatus::optimal) return sol;

  // Duals on the final factorization.
  for (int c = 0; c < m_; ++c) y[c] = cost_[head_[c]];
  btran(y);
  const double sign = p_.sense == Sense::maximize ? -1.0 : 1.0;
  sol.row_dual.resize(m_);
  sol.reduced_cost.resize(n_);
  double dual_obj = 0.0;
  double dual_res = 0.0;
  auto accumulate = [&](double dk, double lo, double up, double xk) {
    if (dk > 0) {
      if (std::isfinite(lo)) dual_obj += dk * lo;
      else {
        dual_obj += dk * xk;
        dual_res = std::max(dual_res, dk);
      }
    } else if (dk < 0) {
      if (std::isfinite(up)) dual_obj += dk * up;
      else {
        dual_obj += dk * xk;
        dual_res = std::max(dual_res, -dk);
      }
    }
  };
  for (int j = 0; j < n_; ++j) {
    const double dj = cost_[j] - dot_column(y, j);
    sol.reduced_cost[j] = sign * dj;
    accumulate(dj, lo_[j], up_[j], sol.primal[j]);
  }
  for (int i = 0; i < m_; ++i) {
    sol.row_dual[i] = sign * y[i];
    accumulate(y[i], lo_[n_ + i], up_[n_ + i], sol.row_activity[i]);
  }
  sol.dual_objective = sign * dual_obj + p_.objective_offset;
  sol.dual_residual = dual_res;
  sol.primal_residual = primal_infeasibility(p_, sol.primal);
  return sol;
}

}  // namespace

LpSolution solve(const LpProblem& problem, const SolverOptions& options) {
  if (auto issues = problem.check(); !issues.empty()) {
    throw std::invalid_argument("invalid LP: " + issues.front());
  }
  PrimalSimplex simplex(problem, options);
  return simplex.run();
}

}  // namespace h2plan::lp

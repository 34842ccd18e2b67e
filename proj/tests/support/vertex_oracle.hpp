#pragma once

// Brute-force LP oracle for tiny problems with finite column bounds: every
// basic solution of [A -I] is enumerated and the best feasible one kept.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "h2plan/lp/problem.hpp"

namespace h2plan::testing {

struct OracleResult {
  double objective;
  std::vector<double> x;
};

// Dense Gauss-Jordan with partial pivoting; false if singular.
inline bool dense_solve(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-9) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return true;
}

/// Minimum of c'x over the polytope (maximize handled by sign). Empty when
/// no feasible vertex exists.
inline std::optional<OracleResult> enumerate_vertices(const lp::LpProblem& p) {
  const int n = p.num_cols(), m = p.num_rows();
  const int total = n + m;
  const double sign = p.sense == lp::Sense::maximize ? -1.0 : 1.0;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(m), std::vector<double>(total, 0.0));
  for (int j = 0; j < n; ++j)
    for (auto k = p.matrix.start[j]; k < p.matrix.start[j + 1]; ++k) a[p.matrix.index[k]][j] = p.matrix.value[k];
  for (int i = 0; i < m; ++i) a[i][n + i] = -1.0;
  std::vector<double> lo(total), up(total);
  for (int j = 0; j < n; ++j) lo[j] = p.col_lower[j], up[j] = p.col_upper[j];
  for (int i = 0; i < m; ++i) lo[n + i] = p.row_lower[i], up[n + i] = p.row_upper[i];

  std::optional<OracleResult> best;
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[i] = i;

  auto evaluate_basis = [&] {
    std::vector<char> in_basis(total, 0);
    for (int b : basis) in_basis[b] = 1;
    std::vector<int> nonbasic;
    for (int k = 0; k < total; ++k)
      if (!in_basis[k]) nonbasic.push_back(k);
    // Explicit inverse of the basis, reused for every bound assignment.
    std::vector<std::vector<double>> bmat(static_cast<std::size_t>(m), std::vector<double>(m));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) bmat[r][c] = a[r][basis[c]];
    std::vector<std::vector<double>> inv(static_cast<std::size_t>(m), std::vector<double>(m));
    for (int c = 0; c < m; ++c) {
      std::vector<double> e(static_cast<std::size_t>(m), 0.0);
      e[c] = 1.0;
      if (!dense_solve(bmat, e)) return;
      for (int r = 0; r < m; ++r) inv[r][c] = e[r];
    }
    const std::size_t combos = std::size_t{1} << nonbasic.size();
    std::vector<double> z(total), rhs(static_cast<std::size_t>(m));
    for (std::size_t mask = 0; mask < combos; ++mask) {
      bool ok = true;
      for (std::size_t q = 0; q < nonbasic.size() && ok; ++q) {
        const int k = nonbasic[q];
        const bool upper = (mask >> q) & 1;
        const double v = upper ? up[k] : lo[k];
        // Infinite bounds are not vertices; fixed variables have one choice.
        if (!std::isfinite(v) || (upper && lo[k] == up[k])) ok = false;
        z[k] = v;
      }
      if (!ok) continue;
      for (int r = 0; r < m; ++r) {
        rhs[r] = 0.0;
        for (int k : nonbasic) rhs[r] -= a[r][k] * z[k];
      }
      for (int c = 0; c < m; ++c) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += inv[c][r] * rhs[r];
        z[basis[c]] = s;
      }
      for (int k = 0; k < total && ok; ++k) {
        const double tol = 1e-9 * std::max(1.0, std::abs(z[k]));
        if (z[k] < lo[k] - tol || z[k] > up[k] + tol) ok = false;
      }
      if (!ok) continue;
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += sign * p.objective[j] * z[j];
      if (!best || obj < best->objective) best = OracleResult{obj, std::vector<double>(z.begin(), z.begin() + n)};
    }
  };

  while (true) {
    evaluate_basis();
    int i = m - 1;
    while (i >= 0 && basis[i] == total - m + i) --i;
    if (i < 0) break;
    ++basis[i];
    for (int k = i + 1; k < m; ++k) basis[k] = basis[k - 1] + 1;
  }
  if (best) best->objective = sign * best->objective + p.objective_offset;
  return best;
}

/// Random LP with finite column bounds; rows mix <=, >=, = and ranged.
/// Row bounds are centred on a random point so most instances are feasible.
inline lp::LpProblem random_small_lp(std::mt19937_64& rng, int max_cols = 8, int max_rows = 8) {
  std::uniform_int_distribution<int> ncols(1, max_cols), nrows(1, max_rows), kind(0, 4);
  std::uniform_real_distribution<double> coef(-5.0, 5.0), unit(0.0, 1.0);
  const int n = ncols(rng), m = nrows(rng);
  lp::LpBuilder b;
  std::vector<double> x0;
  for (int j = 0; j < n; ++j) {
    const double lo = std::round(coef(rng));
    const double up = lo + 1.0 + std::round(4.0 * unit(rng));
    b.add_column("x" + std::to_string(j), lo, up, std::round(coef(rng) * 10.0) / 10.0);
    x0.push_back(lo + (up - lo) * unit(rng));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<lp::Term> terms;
    double act = 0.0;
    for (int j = 0; j < n; ++j) {
      if (unit(rng) < 0.3) continue;
      const double c = std::round(coef(rng));
      if (c == 0.0) continue;
      terms.push_back({lp::ColId{j}, c});
      act += c * x0[j];
    }
    const double slack = 3.0 * unit(rng) - 0.5;  // occasionally cuts x0 off
    double lo = -lp::kInf, up = lp::kInf;
    switch (kind(rng)) {
      case 0: up = act + slack; break;
      case 1: lo = act - slack; break;
      case 2: lo = up = std::round(act); break;
      default: lo = act - slack; up = act + slack + 1.0; break;
    }
    b.add_row("r" + std::to_string(i), lo, up, terms);
  }
  if (unit(rng) < 0.3) b.set_sense(lp::Sense::maximize);
  return b.build();
}

}  // namespace h2plan::testing

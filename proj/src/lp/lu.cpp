#include "lu.hpp"

#include <algorithm>
#include <cmath>

namespace h2plan::lp {

namespace {

constexpr double kThreshold = 0.1;
constexpr double kSingular = 1e-11;
constexpr int kSearchColumns = 4;

}  // namespace

bool SparseLu::factor(int m, const std::vector<Column>& columns) {
  m_ = m;
  prow_.assign(m, -1);
  qcol_.assign(m, -1);
  pivot_.assign(m, 0.0);
  lstart_.assign(1, 0);
  lidx_.clear();
  lval_.clear();
  ustart_.assign(1, 0);
  uidx_.clear();
  uval_.clear();
  error_.clear();

  std::vector<Column> col(columns);
  std::vector<std::vector<int>> row(m);
  for (int j = 0; j < m; ++j)
    for (const auto& [i, v] : col[j]) row[i].push_back(j);
  std::vector<char> row_done(m, 0), col_done(m, 0);

  // Lazy buckets keyed by active count; stale entries are skipped.
  std::vector<std::vector<int>> col_bucket(m + 2), row_bucket(m + 2);
  auto col_count = [&](int j) { return static_cast<int>(col[j].size()); };
  auto row_count = [&](int i) { return static_cast<int>(row[i].size()); };
  for (int j = 0; j < m; ++j) col_bucket[std::min(col_count(j), m + 1)].push_back(j);
  for (int i = 0; i < m; ++i) row_bucket[std::min(row_count(i), m + 1)].push_back(i);

  auto col_max = [&](int j) {
    double mx = 0.0;
    for (const auto& e : col[j]) mx = std::max(mx, std::abs(e.second));
    return mx;
  };

  std::vector<double> scatter(m, 0.0);
  std::vector<char> mark(m, 0);

  for (int k = 0; k < m; ++k) {
    int p = -1, q = -1;
    double best_cost = 0.0;

    // Row singletons that pass the threshold test are free of fill.
    for (auto& bucket = row_bucket[1]; !bucket.empty() && p < 0;) {
      const int i = bucket.back();
      bucket.pop_back();
      if (row_done[i] || row_count(i) != 1) continue;
      const int j = row[i][0];
      double v = 0.0;
      for (const auto& e : col[j])
        if (e.first == i) v = e.second;
      if (std::abs(v) > kSingular && std::abs(v) >= kThreshold * col_max(j)) {
        p = i;
        q = j;
      } else {
        bucket.insert(bucket.begin(), i);
        break;
      }
    }

    if (p < 0) {
      int examined = 0;
      for (int c = 1; c <= m + 1; ++c) {
        auto& bucket = col_bucket[c];
        for (std::size_t b = bucket.size(); b-- > 0;) {
          const int j = bucket[b];
          if (col_done[j] || std::min(col_count(j), m + 1) != c) {
            bucket[b] = bucket.back();
            bucket.pop_back();
            continue;
          }
          const double mx = col_max(j);
          if (mx <= kSingular) continue;
          ++examined;
          for (const auto& [i, v] : col[j]) {
            if (std::abs(v) < kThreshold * mx) continue;
            const double cost = static_cast<double>(row_count(i) - 1) * (c - 1);
            if (p < 0 || cost < best_cost) {
              p = i;
              q = j;
              best_cost = cost;
            }
          }
          if (p >= 0 && (best_cost == 0.0 || examined >= kSearchColumns)) break;
        }
        if (p >= 0 && (best_cost == 0.0 || examined >= kSearchColumns)) break;
      }
    }
    if (p < 0) {
      error_ = "singular basis at elimination step " + std::to_string(k);
      return false;
    }

    double a = 0.0;
    for (const auto& e : col[q])
      if (e.first == p) a = e.second;
    prow_[k] = p;
    qcol_[k] = q;
    pivot_[k] = a;
    row_done[p] = 1;
    col_done[q] = 1;

    // L multipliers from the pivot column; column q leaves the active rows.
    for (const auto& [i, v] : col[q]) {
      auto& r = row[i];
      r.erase(std::find(r.begin(), r.end(), q));
      if (i == p) continue;
      lidx_.push_back(i);
      lval_.push_back(v / a);
      scatter[i] = v / a;
      mark[i] = 1;
      row_bucket[std::min(row_count(i), m + 1)].push_back(i);
    }
    lstart_.push_back(lidx_.size());
    col[q].clear();

    // U row and the Schur complement update.
    for (int j : row[p]) {
      auto& cj = col[j];
      double u = 0.0;
      for (std::size_t t = 0; t < cj.size(); ++t) {
        if (cj[t].first == p) {
          u = cj[t].second;
          cj[t] = cj.back();
          cj.pop_back();
          break;
        }
      }
      uidx_.push_back(j);
      uval_.push_back(u);
      if (u != 0.0) {
        for (auto& e : cj) {
          if (mark[e.first]) {
            e.second -= scatter[e.first] * u;
            mark[e.first] = 2;
          }
        }
        for (std::size_t t = lstart_[k]; t < lstart_[k + 1]; ++t) {
          const int i = lidx_[t];
          if (mark[i] == 2) {
            mark[i] = 1;
            continue;
          }
          cj.emplace_back(i, -lval_[t] * u);
          row[i].push_back(j);
          row_bucket[std::min(row_count(i), m + 1)].push_back(i);
        }
      }
      col_bucket[std::min(col_count(j), m + 1)].push_back(j);
    }
    ustart_.push_back(uidx_.size());
    row[p].clear();
    for (std::size_t t = lstart_[k]; t < lstart_[k + 1]; ++t) {
      scatter[lidx_[t]] = 0.0;
      mark[lidx_[t]] = 0;
    }
  }
  work_.assign(m, 0.0);
  return true;
}

void SparseLu::ftran(std::vector<double>& v) const {
  for (int k = 0; k < m_; ++k) {
    const double w = v[prow_[k]];
    if (w == 0.0) continue;
    for (std::size_t t = lstart_[k]; t < lstart_[k + 1]; ++t) v[lidx_[t]] -= lval_[t] * w;
  }
  auto& x = work_;
  for (int k = m_ - 1; k >= 0; --k) {
    double s = v[prow_[k]];
    for (std::size_t t = ustart_[k]; t < ustart_[k + 1]; ++t) s -= uval_[t] * x[uidx_[t]];
    x[qcol_[k]] = s / pivot_[k];
  }
  v.swap(x);
}

void SparseLu::btran(std::vector<double>& v) const {
  auto& z = work_;
  for (int k = 0; k < m_; ++k) {
    const double s = v[qcol_[k]] / pivot_[k];
    z[k] = s;
    if (s == 0.0) continue;
    for (std::size_t t = ustart_[k]; t < ustart_[k + 1]; ++t) v[uidx_[t]] -= uval_[t] * s;
  }
  for (int k = m_ - 1; k >= 0; --k) {
    double s = z[k];
    for (std::size_t t = lstart_[k]; t < lstart_[k + 1]; ++t) s -= lval_[t] * v[lidx_[t]];
    v[prow_[k]] = s;
  }
}

}  // namespace h2plan::lp

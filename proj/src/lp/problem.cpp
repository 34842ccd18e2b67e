#include "h2plan/lp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace h2plan::lp {

std::vector<std::vector<Term>> LpProblem::rows() const {
  std::vector<std::vector<Term>> out(num_rows());
  for (int j = 0; j < matrix.cols; ++j) {
    for (auto k = matrix.start[j]; k < matrix.start[j + 1]; ++k) {
      out[matrix.index[k]].push_back({ColId{j}, matrix.value[k]});
    }
  }
  return out;
}

std::vector<std::string> LpProblem::check() const {
  std::vector<std::string> issues;
  const auto n = static_cast<std::size_t>(num_cols());
  const auto m = static_cast<std::size_t>(num_rows());
  if (col_lower.size() != n || col_upper.size() != n || col_names.size() != n)
    issues.push_back("column arrays have inconsistent lengths");
  if (row_upper.size() != m || row_names.size() != m)
    issues.push_back("row arrays have inconsistent lengths");
  if (matrix.cols != num_cols() || matrix.rows != num_rows() ||
      matrix.start.size() != n + 1)
    issues.push_back("matrix dimensions do not match bounds");
  if (!issues.empty()) return issues;

  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j]))
      issues.push_back(fmt::format("column {} has non-finite cost", col_names[j]));
    if (std::isnan(col_lower[j]) || std::isnan(col_upper[j]) ||
        col_lower[j] > col_upper[j] || col_lower[j] == kInf ||
        col_upper[j] == -kInf)
      issues.push_back(fmt::format("column {} has inconsistent bounds [{}, {}]",
                                   col_names[j], col_lower[j], col_upper[j]));
    int prev = -1;
    for (auto k = matrix.start[j]; k < matrix.start[j + 1]; ++k) {
      const int i = matrix.index[k];
      if (i < 0 || i >= num_rows() || i <= prev) {
        issues.push_back(fmt::format("column {} has bad row index {}", col_names[j], i));
        break;
      }
      if (!std::isfinite(matrix.value[k]))
        issues.push_back(fmt::format("column {} has non-finite coefficient", col_names[j]));
      prev = i;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::isnan(row_lower[i]) || std::isnan(row_upper[i]) ||
        row_lower[i] > row_upper[i] || row_lower[i] == kInf ||
        row_upper[i] == -kInf)
      issues.push_back(fmt::format("row {} has inconsistent bounds [{}, {}]",
                                   row_names[i], row_lower[i], row_upper[i]));
  }
  if (!std::isfinite(objective_offset)) issues.push_back("non-finite objective offset");
  return issues;
}

ColId LpBuilder::add_column(std::string name, double lower, double upper,
                            double cost) {
  col_names_.push_back(std::move(name));
  lower_.push_back(lower);
  upper_.push_back(upper);
  cost_.push_back(cost);
  return ColId{static_cast<int>(cost_.size()) - 1};
}

RowId LpBuilder::add_row(std::string name, double lower, double upper,
                         std::span<const Term> terms) {
  for (const auto& t : terms) {
    if (t.col.index < 0 || t.col.index >= num_cols())
      throw std::out_of_range(fmt::format("row {} references unknown column {}",
                                          name, t.col.index));
  }
  row_names_.push_back(std::move(name));
  row_lower_.push_back(lower);
  row_upper_.push_back(upper);
  terms_.insert(terms_.end(), terms.begin(), terms.end());
  row_start_.push_back(terms_.size());
  return RowId{static_cast<int>(row_lower_.size()) - 1};
}

void LpBuilder::add_objective(ColId col, double coef) {
  cost_.at(col.index) += coef;
}

void LpBuilder::set_bounds(ColId col, double lower, double upper) {
  lower_.at(col.index) = lower;
  upper_.at(col.index) = upper;
}

std::span<const Term> LpBuilder::row_terms(RowId row) const {
  const auto begin = row_start_.at(row.index);
  const auto end = row_start_.at(row.index + 1);
  return {terms_.data() + begin, end - begin};
}

LpProblem LpBuilder::build() const {
  LpProblem p;
  p.name = name_;
  p.sense = sense_;
  p.col_names = col_names_;
  p.row_names = row_names_;
  p.objective = cost_;
  p.objective_offset = offset_;
  p.col_lower = lower_;
  p.col_upper = upper_;
  p.row_lower = row_lower_;
  p.row_upper = row_upper_;

  const int n = num_cols();
  const int m = num_rows();
  struct Entry {
    int col, row;
    double value;
  };
  std::vector<Entry> entries;
  entries.reserve(terms_.size());
  for (int i = 0; i < m; ++i) {
    for (auto k = row_start_[i]; k < row_start_[i + 1]; ++k)
      entries.push_back({terms_[k].col.index, i, terms_[k].coef});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });

  auto& mat = p.matrix;
  mat.rows = m;
  mat.cols = n;
  mat.start.assign(n + 1, 0);
  std::size_t k = 0;
  for (int j = 0; j < n; ++j) {
    mat.start[j] = mat.index.size();
    while (k < entries.size() && entries[k].col == j) {
      const int row = entries[k].row;
      double sum = 0.0;
      while (k < entries.size() && entries[k].col == j && entries[k].row == row)
        sum += entries[k++].value;
      if (sum != 0.0) {
        mat.index.push_back(row);
        mat.value.push_back(sum);
      }
    }
  }
  mat.start[n] = mat.index.size();
  return p;
}

std::vector<double> row_activity(const LpProblem& problem,
                                 std::span<const double> x) {
  std::vector<double> act(problem.num_rows(), 0.0);
  const auto& mat = problem.matrix;
  for (int j = 0; j < mat.cols; ++j) {
    if (x[j] == 0.0) continue;
    for (auto k = mat.start[j]; k < mat.start[j + 1]; ++k)
      act[mat.index[k]] += mat.value[k] * x[j];
  }
  return act;
}

double objective_value(const LpProblem& problem, std::span<const double> x) {
  double obj = problem.objective_offset;
  for (int j = 0; j < problem.num_cols(); ++j) obj += problem.objective[j] * x[j];
  return obj;
}

}  // namespace h2plan::lp

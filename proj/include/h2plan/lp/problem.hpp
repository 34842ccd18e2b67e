#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace h2plan::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };

struct ColId {
  int index = -1;
  friend bool operator==(ColId, ColId) = default;
};

struct RowId {
  int index = -1;
  friend bool operator==(RowId, RowId) = default;
};

struct Term {
  ColId col;
  double coef;
};

/// Column-compressed sparse matrix. Entries of column j live in
/// [start[j], start[j+1]) with strictly increasing row indices.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::size_t> start{0};
  std::vector<int> index;
  std::vector<double> value;

  std::size_t nnz() const { return index.size(); }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// A linear program in bounded row form:
///   min/max  c'x + offset
///   s.t.     row_lower <= A x <= row_upper
///            col_lower <=   x <= col_upper
struct LpProblem {
  std::string name = "PROBLEM";
  Sense sense = Sense::minimize;
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<double> row_lower;
  std::vector<double> row_upper;
  SparseMatrix matrix;

  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(row_lower.size()); }

  /// Row-wise view of the matrix; O(nnz).
  std::vector<std::vector<Term>> rows() const;

  /// Structural problems with the data (bad indices, lower > upper, NaN or
  /// infinite objective entries). Empty when the problem is well formed.
  std::vector<std::string> check() const;
};

/// Incremental construction of an LpProblem. Columns and rows are
/// append-only; duplicate (row, col) entries are summed on build().
class LpBuilder {
 public:
  ColId add_column(std::string name, double lower, double upper,
                   double cost = 0.0);
  RowId add_row(std::string name, double lower, double upper,
                std::span<const Term> terms);
  RowId add_row(std::string name, double lower, double upper,
                std::initializer_list<Term> terms) {
    return add_row(std::move(name), lower, upper,
                   std::span<const Term>(terms.begin(), terms.size()));
  }

  void add_objective(ColId col, double coef);
  void add_objective_constant(double value) { offset_ += value; }
  void set_bounds(ColId col, double lower, double upper);
  void set_sense(Sense sense) { sense_ = sense; }
  void set_name(std::string name) { name_ = std::move(name); }

  double objective_coef(ColId col) const { return cost_.at(col.index); }
  double lower(ColId col) const { return lower_.at(col.index); }
  double upper(ColId col) const { return upper_.at(col.index); }
  double objective_constant() const { return offset_; }
  int num_cols() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(row_lower_.size()); }
  std::span<const Term> row_terms(RowId row) const;
  double row_lower(RowId row) const { return row_lower_.at(row.index); }
  double row_upper(RowId row) const { return row_upper_.at(row.index); }

  LpProblem build() const;

 private:
  std::string name_ = "PROBLEM";
  Sense sense_ = Sense::minimize;
  std::vector<std::string> col_names_;
  std::vector<double> cost_, lower_, upper_;
  double offset_ = 0.0;
  std::vector<std::string> row_names_;
  std::vector<double> row_lower_, row_upper_;
  std::vector<std::size_t> row_start_{0};
  std::vector<Term> terms_;
};

/// Row activities A x.
std::vector<double> row_activity(const LpProblem& problem,
                                 std::span<const double> x);

/// c'x + offset in the problem's own sense.
double objective_value(const LpProblem& problem, std::span<const double> x);

}  // namespace h2plan::lp

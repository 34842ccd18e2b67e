#pragma once

#include <string>
#include <utility>
#include <vector>

namespace h2plan::lp {

/// Sparse LU of a square basis matrix by right-looking elimination with
/// Markowitz pivot choice and threshold partial pivoting. Solves skip
/// zero entries, so very sparse right-hand sides stay cheap.
class SparseLu {
 public:
  using Column = std::vector<std::pair<int, double>>;  // (row, value)

  /// Factorizes the matrix whose column c is columns[c]. False if the
  /// matrix is numerically singular.
  bool factor(int m, const std::vector<Column>& columns);

  /// Solves B x = v in place; x is indexed by column.
  void ftran(std::vector<double>& v) const;
  /// Solves B' y = v in place; y is indexed by row.
  void btran(std::vector<double>& v) const;

  const std::string& error() const { return error_; }

 private:
  int m_ = 0;
  std::vector<int> prow_, qcol_;
  std::vector<double> pivot_;
  // L multipliers of step k: rows lidx_[lstart_[k]..lstart_[k+1]).
  std::vector<std::size_t> lstart_{0};
  std::vector<int> lidx_;
  std::vector<double> lval_;
  // U row of step k over columns eliminated later.
  std::vector<std::size_t> ustart_{0};
  std::vector<int> uidx_;
  std::vector<double> uval_;
  mutable std::vector<double> work_;
  std::string error_;
};

}  // namespace h2plan::lp

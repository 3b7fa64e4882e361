#pragma once

#include <optional>
#include <vector>

#include "octgi/rational.hpp"

namespace octgi {

using QVec = std::vector<Rational>;

/// Incrementally maintained reduced row-echelon basis of a row space over Q.
/// Insertion uses fraction-free scaling internally and normalizes pivots to
/// 1, keeping rows fully reduced against each other.
class RowSpace {
public:
  explicit RowSpace(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the basis in place; returns the residual (zero vector
  /// if v was in the span).
  QVec reduce(QVec v) const;

  /// Inserts v; returns true if the rank grew.
  bool insert(QVec v);

  bool contains(const QVec& v) const;

private:
  int cols_;
  std::vector<QVec> rows_;   // pivot columns strictly increasing
  std::vector<int> pivots_;
};

/// Basis of { c : c * M = 0 } (left null space of the row matrix M), as a
/// canonical RowSpace. Rows of M need a consistent width.
RowSpace left_nullspace(const std::vector<QVec>& m, int cols);

/// Solves target = sum_i c_i rows[i]; returns the coefficients or nullopt.
/// Deterministic: the combination produced by an RREF with bookkeeping.
std::optional<QVec> solve_combination(const std::vector<QVec>& rows, const QVec& target);

bool vec_is_zero(const QVec& v);

}  // namespace octgi

#include "octgi/linalg.hpp"

#include <algorithm>

#include "octgi/error.hpp"

namespace octgi {

bool vec_is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

QVec RowSpace::reduce(QVec v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("vector width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    Rational f = c;  // pivot is 1
    const QVec& row = rows_[r];
    for (int j = pivots_[r]; j < cols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool RowSpace::insert(QVec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rational inv = 1 / v[p];
  for (int j = p; j < cols_; ++j)
    if (v[j] != 0) v[j] *= inv;
  // back-eliminate p from existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational& c = rows_[r][p];
    if (c == 0) continue;
    Rational f = c;
    for (int j = p; j < cols_; ++j)
      if (v[j] != 0) rows_[r][j] -= f * v[j];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpace::contains(const QVec& v) const { return vec_is_zero(reduce(v)); }

RowSpace left_nullspace(const std::vector<QVec>& m, int cols) {
  // Eliminate the rows of M while tracking the combination applied:
  // reduce [M | I]; rows whose M-part vanished give kernel combinations.
  int n = static_cast<int>(m.size());
  RowSpace kernel(n);
  std::vector<QVec> work;   // echelon rows of M-part
  std::vector<QVec> combo;  // matching combination rows
  std::vector<int> piv;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != cols) throw DimensionError("matrix width mismatch");
    QVec v = m[i];
    QVec c(n, Rational(0));
    c[i] = 1;
    for (std::size_t r = 0; r < work.size(); ++r) {
      const Rational& lead = v[piv[r]];
      if (lead == 0) continue;
      Rational f = lead;
      for (int j = 0; j < cols; ++j)
        if (work[r][j] != 0) v[j] -= f * work[r][j];
      for (int j = 0; j < n; ++j)
        if (combo[r][j] != 0) c[j] -= f * combo[r][j];
    }
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      kernel.insert(std::move(c));
    } else {
      Rational inv = 1 / v[p];
      for (int j = 0; j < cols; ++j)
        if (v[j] != 0) v[j] *= inv;
      for (int j = 0; j < n; ++j)
        if (c[j] != 0) c[j] *= inv;
      work.push_back(std::move(v));
      combo.push_back(std::move(c));
      piv.push_back(p);
    }
  }
  return kernel;
}

std::optional<QVec> solve_combination(const std::vector<QVec>& rows, const QVec& target) {
  if (rows.empty()) return vec_is_zero(target) ? std::optional<QVec>(QVec{}) : std::nullopt;
  int cols = static_cast<int>(target.size());
  int n = static_cast<int>(rows.size());
  // echelonize rows with combination bookkeeping
  std::vector<QVec> work, combo;
  std::vector<int> piv;
  for (int i = 0; i < n; ++i) {
    QVec v = rows[i];
    if (static_cast<int>(v.size()) != cols) throw DimensionError("row width mismatch");
    QVec c(n, Rational(0));
    c[i] = 1;
    for (std::size_t r = 0; r < work.size(); ++r) {
      const Rational& lead = v[piv[r]];
      if (lead == 0) continue;
      Rational f = lead;
      for (int j = 0; j < cols; ++j)
        if (work[r][j] != 0) v[j] -= f * work[r][j];
      for (int j = 0; j < n; ++j)
        if (combo[r][j] != 0) c[j] -= f * combo[r][j];
    }
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) continue;
    Rational inv = 1 / v[p];
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) v[j] *= inv;
    for (int j = 0; j < n; ++j)
      if (c[j] != 0) c[j] *= inv;
    work.push_back(std::move(v));
    combo.push_back(std::move(c));
    piv.push_back(p);
  }
  QVec v = target;
  QVec sol(n, Rational(0));
  for (std::size_t r = 0; r < work.size(); ++r) {
    const Rational& lead = v[piv[r]];
    if (lead == 0) continue;
    Rational f = lead;
    for (int j = 0; j < cols; ++j)
      if (work[r][j] != 0) v[j] -= f * work[r][j];
    for (int j = 0; j < n; ++j)
      if (combo[r][j] != 0) sol[j] += f * combo[r][j];
  }
  if (!vec_is_zero(v)) return std::nullopt;
  return sol;
}

}  // namespace octgi

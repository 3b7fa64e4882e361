#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "octgi/rational.hpp"

namespace octgi {

/// Sparse multivariate polynomial over the rationals. Used as the scalar
/// type for generic (symbolic-coordinate) evaluation: one indeterminate per
/// coordinate of a generic algebra element.
class SymPoly {
public:
  /// Monomial: sorted (variable id, exponent) pairs, exponents > 0.
  using Mono = std::vector<std::pair<int, int>>;

  SymPoly() = default;
  static SymPoly constant(const Rational& c);
  static SymPoly variable(int id);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rational>& terms() const { return terms_; }

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator-() const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);

  SymPoly operator*(const Rational& c) const;

  bool operator==(const SymPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymPoly& o) const { return !(*this == o); }

  std::string str() const;  // deterministic, for diagnostics

private:
  void add_term(const Mono& m, const Rational& c);
  std::map<Mono, Rational> terms_;
};

inline SymPoly operator*(const Rational& c, const SymPoly& p) { return p * c; }

}  // namespace octgi

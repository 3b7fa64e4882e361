#pragma once

#include <string>
#include <vector>

#include "octgi/algebra.hpp"
#include "octgi/freealg.hpp"
#include "octgi/rational.hpp"

namespace octgi {

/// Dense n x n matrix over Q.
struct QMat {
  int n = 0;
  std::vector<Rational> e;  // row-major

  static QMat zero(int n);
  static QMat identity(int n);
  static QMat unit(int n, int i, int j);
  Rational& at(int i, int j) { return e[i * n + j]; }
  const Rational& at(int i, int j) const { return e[i * n + j]; }
  bool operator==(const QMat& o) const { return n == o.n && e == o.e; }
  bool is_zero() const;
  std::string str() const;
};

QMat mat_mul(const QMat& a, const QMat& b);
QMat mat_add(const QMat& a, const QMat& b);
QMat mat_sub(const QMat& a, const QMat& b);
QMat mat_scale(const QMat& a, const Rational& c);

/// M_n(Q) graded by Z_n: component alpha is spanned by the e_{i,j} with
/// j - i = alpha (mod n).
struct GradedMatrixAlgebra {
  int n;
  explicit GradedMatrixAlgebra(int n) : n(n) {}
  int component_of(int i, int j) const { return ((j - i) % n + n) % n; }
  std::vector<QMat> component_basis(int alpha) const;
  /// Components are closed under multiplication (degrees add mod n) and
  /// their union is a basis of the full matrix space.
  bool check_grading_closure() const;
};

/// Evaluates a free graded polynomial in Z2-graded M_2 (rank-1 variable
/// grades; component 0 = diagonal, 1 = antidiagonal).
QMat eval_poly_m2(const Poly& f, const std::map<GradedVar, QMat, VarLess>& asg);

struct M2Report {
  bool eq17 = false;        // [x,y] = 0 on the diagonal component
  bool eq18 = false;        // x1 x x2 = x2 x x1, g(x1)=g(x2)=g(x)=1 (both bracketings)
  bool associativity = false;
  bool pass() const { return eq17 && eq18 && associativity; }
};

/// Exhaustive basis verification of the Z2-graded M_2 identities.
M2Report check_m2_identities();

/// The split-quaternion -> M_2 isomorphism, found by bounded search over
/// signed assignments of the canonical basis to {I, E11-E22, E12+E21,
/// E12-E21} and verified multiplicative on all 16 basis products.
struct IsoTable {
  std::vector<QMat> image;         // per CD basis index 0..3
  std::vector<std::string> label;  // human-readable images
  bool grade_compatible = false;   // e00,e10 diagonal; e01,e11 antidiagonal
};
IsoTable split_quaternion_iso();

/// Z2-restriction of the catalog: equations with satisfiable rank-1
/// conditions, instantiated at their unique admissible grades.
struct RestrictedRule {
  int number;           // 5,6,7,9,13,14
  std::string name;     // "5*", ...
  Poly poly;            // the identity at its Z2 grades
  bool generator;       // (5*),(13*),(14*) generate; others are re-derived
};
std::vector<RestrictedRule> z2_restricted_rules();

/// Number of rank-1 grade assignments satisfying the side condition of the
/// catalog equation (zero for (8),(10),(11),(12): they do not meet Z2).
long z2_instance_count(int eq_number);

struct RederiveReport {
  bool m6 = false, m7 = false, m9 = false;  // members of <(5*),(13*),(14*)>
  bool pass() const { return m6 && m7 && m9; }
};
RederiveReport rederive_restricted();

/// Renders the derive-m2 report (restricted rules, membership verdicts,
/// isomorphism table) as TSV-ish deterministic text.
std::string derive_m2_text();

}  // namespace octgi

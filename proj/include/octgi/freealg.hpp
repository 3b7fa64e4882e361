#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "octgi/error.hpp"
#include "octgi/group.hpp"
#include "octgi/rational.hpp"

namespace octgi {

/// Graded variable x_id with a fixed grade. The (id, grade) pair is the
/// identity of the variable.
struct GradedVar {
  int id = 0;
  GroupElem grade;

  bool operator==(const GradedVar& o) const { return id == o.id && grade == o.grade; }
  bool operator!=(const GradedVar& o) const { return !(*this == o); }
  std::string str() const { return "x" + std::to_string(id) + ":" + grade.str(); }
};

/// Variable order used for regularity: grade first (zero greatest), then id.
inline bool var_less(const GradedVar& a, const GradedVar& b) {
  if (a.grade.order_key() != b.grade.order_key())
    return a.grade.order_key() < b.grade.order_key();
  return a.id < b.id;
}

struct VarLess {
  bool operator()(const GradedVar& a, const GradedVar& b) const { return var_less(a, b); }
};

/// Injectable total order on variables (shirshov checks rerun under
/// alternative orders).
using VariableOrder = std::function<bool(const GradedVar&, const GradedVar&)>;

/// Nonassociative monomial: a strictly binary tree over graded variables.
/// Immutable and cheaply copyable; degree and grade are cached per node.
class Term {
public:
  Term() = default;  // empty; only valid after assignment
  static Term leaf(const GradedVar& v);
  static Term mul(const Term& l, const Term& r);

  bool valid() const { return node_ != nullptr; }
  bool is_leaf() const;
  const GradedVar& var() const;  // leaf only
  Term left() const;
  Term right() const;

  int degree() const;        // leaf count
  GroupElem g_degree() const;  // product of leaf grades

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  std::size_t hash() const;

  std::string str() const;  // fully parenthesized grammar form

private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit Term(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// Canonical total order on terms: degree, then total grade (greater grade
/// key first), then structurally with greater leading variables first. Used
/// both for polynomial normalization and as the decrease gate of the
/// rewrite engine.
int term_compare(const Term& a, const Term& b);
inline bool term_less(const Term& a, const Term& b) { return term_compare(a, b) < 0; }

/// Exact-rational linear combination of terms, kept canonical: sorted by
/// term order, like terms merged, no zero coefficients.
class Poly {
public:
  Poly() = default;  // zero
  static Poly zero() { return Poly(); }
  static Poly monomial(const Rational& c, const Term& t);
  static Poly from_terms(std::vector<std::pair<Rational, Term>> terms);

  bool is_zero() const { return ms_.empty(); }
  std::size_t size() const { return ms_.size(); }
  const std::vector<std::pair<Rational, Term>>& monomials() const { return ms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Rational& c) const;
  /// Free (nonassociative) product.
  Poly mul(const Poly& o) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  std::vector<std::pair<Rational, Term>> ms_;
};

/// Degree bookkeeping of a term.
struct Degrees {
  int total = 0;
  std::map<GradedVar, int, VarLess> per_var;
  std::map<unsigned, int> per_component;  // keyed by grade order_key
};
Degrees degrees(const Term& t);

/// Partition of a polynomial by full multidegree vector; concatenation sums
/// back to the input. Deterministic order.
std::vector<Poly> multihomogeneous_parts(const Poly& f);
bool is_multihomogeneous(const Poly& f);
bool is_multilinear(const Poly& f);

/// Distinct variables of a polynomial, sorted by the variable order.
std::vector<GradedVar> poly_vars(const Poly& f);

/// Left-normed bracketing <x1,...,xn>; DomainError on an empty list.
Term left_norm(const std::vector<GradedVar>& vars);

/// r1-word: left-normed product of leaves. Regular if the leaves are
/// non-decreasing in the variable order.
bool is_r1_word(const Term& t);
bool is_regular_r1(const Term& t);
bool is_regular_r1(const Term& t, const VariableOrder& less);

/// r2-word: left-normed product of r1-words; regular if those r1-words can
/// be chosen regular. Equivalently every subtree hanging off the left spine
/// is a leaf or a regular r1-word.
bool is_regular_r2(const Term& t);
bool is_regular_r2(const Term& t, const VariableOrder& less);

/// Leaves of t in left-to-right order.
std::vector<GradedVar> term_leaves(const Term& t);

/// * involution on the subalgebra U generated by nonzero-component
/// variables: reverses every monomial and negates once per leaf.
/// DomainError if any zero-component leaf is present.
Poly star(const Poly& f);
std::pair<int, Term> star_term(const Term& t);

/// All distinct multilinear-style monomials on the given leaf multiset
/// (every bracketing of every distinct arrangement), in canonical term
/// order. The count for n distinct leaves is Catalan(n-1) * n!.
std::vector<Term> all_monomials(const std::vector<GradedVar>& leaves);

/// All bracketings of a fixed leaf sequence, in a deterministic order.
std::vector<Term> all_bracketings(const std::vector<GradedVar>& leaves);

}  // namespace octgi

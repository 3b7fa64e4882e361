#pragma once

#include <functional>
#include <string>
#include <vector>

#include "octgi/algebra.hpp"
#include "octgi/checker.hpp"
#include "octgi/freealg.hpp"
#include "octgi/linalg.hpp"
#include "octgi/rewrite.hpp"

namespace octgi {

/// The multilinear component at a fixed grade assignment: variables x1..xn
/// with the given grades, basis all Catalan(n-1) * n! monomials in canonical
/// order. Degree is capped at 5 (1680-dimensional ambient space).
struct MultilinearSpace {
  std::vector<GradedVar> vars;  // sorted by the variable order
  std::vector<Term> basis;

  static MultilinearSpace make(const std::vector<GroupElem>& grades);
  static MultilinearSpace make_for(std::vector<GradedVar> vars);

  int dim() const { return static_cast<int>(basis.size()); }
  int degree() const { return static_cast<int>(vars.size()); }

  /// Index of a monomial in the basis, -1 if absent.
  int index_of(const Term& t) const;

  QVec coeff_vector(const Poly& f) const;
  Poly from_vector(const QVec& v) const;
};

/// Row-reduced basis of a subspace of a multilinear component.
struct Subspace {
  RowSpace rows;
  int dim() const { return rows.rank(); }
};

/// Enumerates the context-embedded substitution instances C[f(w1..wk)] of
/// the generators inside the space: blocks of variables are assigned to the
/// generator slots (disjoint, nonempty, grade condition respected), the w_i
/// run over all monomials of their blocks, and C runs over all one-hole
/// monomial contexts on the remaining variables. Deduplicated. The visitor
/// returns false to stop early.
void enumerate_instances(const std::vector<Rule>& gens, const MultilinearSpace& sp,
                         const std::function<bool(const Poly&)>& visit);

/// Row space of all substitution instances (the multilinear component of
/// the T-ideal generated by `gens` at this multidegree).
Subspace consequence_space(const std::vector<Rule>& gens, const MultilinearSpace& sp);

/// Kernel of the evaluation map: all multilinear identities of the algebra
/// at this multidegree, computed over every homogeneous basis substitution.
Subspace identity_space(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g);

struct CertifyCell {
  std::vector<GroupElem> grades;
  int dim_ambient = 0;
  int dim_cons = 0;
  int dim_id = 0;
  bool equal = false;
  std::vector<Poly> deficit;  // identity-space basis vectors outside the span
};

/// Compares the consequence span against the identity kernel at one grade
/// assignment. Soundness (consequences are identities) is asserted for
/// every rank-contributing instance.
CertifyCell certify_equality(const std::vector<Rule>& gens, const MultilinearSpace& sp,
                             const CayleyDickson& alg, const Grading& g);

/// True iff the multilinear f lies in the consequence span of `gens` at its
/// own multidegree.
bool membership(const Poly& f, const std::vector<Rule>& gens);

/// Shirshov shadow at one grade assignment: every monomial's evaluation
/// vector lies in the span of the regular r2-words' evaluation vectors.
bool shirshov_span_check(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g);
bool shirshov_span_check(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g,
                         const VariableOrder& less);

struct CertifyReport {
  std::vector<CertifyCell> cells;  // lexicographic in the grade tuples
  bool all_equal = true;
};

/// Runs certify_equality for every grade assignment of every degree
/// 1..max_n. Assignments that are permutations of one another share one
/// representative computation (the spaces are equivariant under
/// grade-preserving renamings; the unit suite checks that invariant), unless
/// use_orbits is false. Unequal cells are always recomputed per assignment.
CertifyReport certify_all(const std::vector<Rule>& gens, int max_n, const CayleyDickson& alg,
                          const Grading& g, bool use_orbits = true);

std::string certify_tsv(const CertifyReport& report);

/// Shirshov shadow over all assignments of degrees 2..max_n.
bool shirshov_all(int max_n, const CayleyDickson& alg, const Grading& g, bool use_orbits = true);

}  // namespace octgi

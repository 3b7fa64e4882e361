#pragma once

#include <map>
#include <vector>

#include "octgi/algebra.hpp"
#include "octgi/freealg.hpp"

namespace octgi {

template <class S>
using Assignment = std::map<GradedVar, Elem<S>, VarLess>;

/// Evaluates a term under a variable assignment. Every variable of the term
/// must be assigned; grades are not re-checked here.
template <class S>
Elem<S> eval_term(const CayleyDickson& alg, const Term& t, const Assignment<S>& asg) {
  if (t.is_leaf()) {
    auto it = asg.find(t.var());
    if (it == asg.end()) throw DomainError("unassigned variable " + t.var().str());
    return it->second;
  }
  return alg.multiply(eval_term(alg, t.left(), asg), eval_term(alg, t.right(), asg));
}

template <class S>
Elem<S> eval_poly(const CayleyDickson& alg, const Poly& f, const Assignment<S>& asg) {
  Elem<S> acc;
  acc.coords.assign(alg.dim(), S{});
  for (const auto& [c, t] : f.monomials())
    acc = elem_add(acc, elem_scale(eval_term(alg, t, asg), c));
  return acc;
}

/// Iterates all homogeneous basis substitutions: each variable runs over the
/// basis of its grade's component. Tuples are visited in lexicographic order
/// of basis indices (variables sorted by the variable order).
class BasisSweep {
public:
  BasisSweep(const CayleyDickson& alg, const Grading& g, std::vector<GradedVar> vars);

  /// Advances to the next tuple; fills the assignment. Returns false when
  /// exhausted. The first call yields the first tuple.
  bool next(Assignment<Rational>& out);

  /// Basis indices of the current tuple, parallel to vars().
  const std::vector<int>& current_indices() const { return current_; }
  const std::vector<GradedVar>& vars() const { return vars_; }
  long tuple_count() const;

private:
  const CayleyDickson& alg_;
  const Grading& grading_;
  std::vector<GradedVar> vars_;
  std::vector<const std::vector<int>*> choices_;
  std::vector<int> pos_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Fresh generic element of the component of degree h: one new polynomial
/// indeterminate per coordinate of the component. `next_var` advances.
GElem generic_element(const CayleyDickson& alg, const Grading& g, const GroupElem& h,
                      int& next_var);

/// Generic assignment for all given variables (fresh indeterminates each).
Assignment<SymPoly> generic_assignment(const CayleyDickson& alg, const Grading& g,
                                       const std::vector<GradedVar>& vars);

/// Checks that the variable grades match the grading's group rank.
void check_var_ranks(const std::vector<GradedVar>& vars, const Grading& g);

}  // namespace octgi

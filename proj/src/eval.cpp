#include "octgi/eval.hpp"

namespace octgi {

BasisSweep::BasisSweep(const CayleyDickson& alg, const Grading& g, std::vector<GradedVar> vars)
    : alg_(alg), grading_(g), vars_(std::move(vars)) {
  check_var_ranks(vars_, g);
  for (const auto& v : vars_) {
    const auto& basis = grading_.component_basis(v.grade);
    if (basis.empty()) throw DomainError("empty component for grade " + v.grade.str());
    choices_.push_back(&basis);
  }
  pos_.assign(vars_.size(), 0);
  current_.assign(vars_.size(), 0);
}

long BasisSweep::tuple_count() const {
  long n = 1;
  for (const auto* c : choices_) n *= static_cast<long>(c->size());
  return n;
}

bool BasisSweep::next(Assignment<Rational>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t k = vars_.size();
    while (k > 0) {
      --k;
      if (pos_[k] + 1 < static_cast<int>(choices_[k]->size())) {
        ++pos_[k];
        for (std::size_t j = k + 1; j < vars_.size(); ++j) pos_[j] = 0;
        break;
      }
      if (k == 0) {
        done_ = true;
        return false;
      }
    }
    if (vars_.empty()) {
      done_ = true;
      return false;
    }
  }
  out.clear();
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    current_[i] = (*choices_[i])[pos_[i]];
    out[vars_[i]] = alg_.basis_elem(current_[i]);
  }
  return true;
}

GElem generic_element(const CayleyDickson& alg, const Grading& g, const GroupElem& h,
                      int& next_var) {
  GElem e;
  e.coords.assign(alg.dim(), SymPoly());
  for (int b : g.component_basis(h)) e.coords[b] = SymPoly::variable(next_var++);
  return e;
}

Assignment<SymPoly> generic_assignment(const CayleyDickson& alg, const Grading& g,
                                       const std::vector<GradedVar>& vars) {
  check_var_ranks(vars, g);
  Assignment<SymPoly> asg;
  int next_var = 0;
  for (const auto& v : vars) asg[v] = generic_element(alg, g, v.grade, next_var);
  return asg;
}

void check_var_ranks(const std::vector<GradedVar>& vars, const Grading& g) {
  for (const auto& v : vars)
    if (v.grade.rank() != g.group_rank())
      throw DimensionError("variable " + v.str() + " does not match grading " + g.name());
}

}  // namespace octgi

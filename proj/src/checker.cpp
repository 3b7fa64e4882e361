#include "octgi/checker.hpp"

#include "octgi/rewrite.hpp"

namespace octgi {

MultilinearCheck is_identity_multilinear(const Poly& f, const CayleyDickson& alg,
                                         const Grading& g) {
  MultilinearCheck res;
  if (f.is_zero()) {
    res.identity = true;
    return res;
  }
  if (!is_multilinear(f))
    throw DomainError("is_identity_multilinear needs multilinear input; use the generic checker");
  res.vars = poly_vars(f);
  BasisSweep sweep(alg, g, res.vars);
  Assignment<Rational> asg;
  while (sweep.next(asg)) {
    QElem val = eval_poly(alg, f, asg);
    if (!val.is_zero()) {
      res.identity = false;
      res.witness = sweep.current_indices();
      res.value = val;
      return res;
    }
  }
  res.identity = true;
  return res;
}

bool is_identity_generic(const Poly& f, const CayleyDickson& alg, const Grading& g) {
  if (f.is_zero()) return true;
  auto vars = poly_vars(f);
  auto asg = generic_assignment(alg, g, vars);
  return eval_poly(alg, f, asg).is_zero();
}

bool is_identity(const Poly& f, const CayleyDickson& alg, const Grading& g) {
  if (f.is_zero()) return true;
  if (is_multilinear(f)) return is_identity_multilinear(f, alg, g).identity;
  return is_identity_generic(f, alg, g);
}

std::vector<Poly> split_by_generic_coefficients(const Poly& f, const GradedVar& x,
                                                const CayleyDickson& alg, const Grading& g) {
  if (f.is_zero()) return {};
  if (!is_identity_generic(f, alg, g))
    throw DomainError("split_by_generic_coefficients expects an identity");
  ZeroTopForm form = zero_top_form(f, x, alg, g);
  if (!form.ok)
    throw DomainError("structured form unavailable: " + form.flag);
  std::vector<Poly> out;
  if (!form.grade_zero_case) {
    for (const auto& slot : form.y) {
      if (slot.is_zero()) continue;
      if (!is_identity_generic(slot, alg, g))
        throw InternalError("slot polynomial failed to be an identity");
      out.push_back(slot);
    }
  } else {
    Term xl = Term::leaf(x);
    std::map<int, std::vector<std::pair<Rational, Term>>> by_i;
    for (const auto& p : form.pairs)
      by_i[p.i].emplace_back(p.coeff, Term::mul(Term::mul(p.y, xl), p.z));
    for (auto& [i, ms] : by_i) {
      Poly slot = Poly::from_terms(std::move(ms));
      if (slot.is_zero()) continue;
      if (!is_identity_generic(slot, alg, g))
        throw InternalError("pair-slot polynomial failed to be an identity");
      out.push_back(slot);
    }
  }
  return out;
}

std::vector<CatalogRow> verify_catalog(const CayleyDickson& alg, const Grading& g) {
  std::vector<CatalogRow> rows;
  for (const auto& entry : identity_catalog()) {
    if (entry.group_rank != g.group_rank()) continue;
    CatalogRow row;
    row.label = entry.label;
    row.name = entry.rule.name;
    row.pass = true;
    auto elems = all_elements(g.group_rank());
    std::vector<int> idx(entry.rule.arity, 0);
    while (true) {
      std::vector<GroupElem> grades;
      for (int i : idx) grades.push_back(elems[i]);
      if (entry.rule.cond(grades)) {
        ++row.instances;
        Poly f = entry.rule.identity_poly(grades);
        bool ok = is_multilinear(f) ? is_identity_multilinear(f, alg, g).identity
                                    : is_identity_generic(f, alg, g);
        if (!ok) row.pass = false;
      }
      int k = entry.rule.arity - 1;
      while (k >= 0 && idx[k] + 1 == static_cast<int>(elems.size())) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace octgi

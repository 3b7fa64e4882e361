#include "octgi/tideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace octgi {

namespace {

constexpr int kDegreeCap = 5;

void check_cap(std::size_t n) {
  if (n == 0) throw DomainError("empty multilinear space");
  if (n > kDegreeCap)
    throw DomainError("degree cap exceeded (max " + std::to_string(kDegreeCap) + ")");
}

}  // namespace

MultilinearSpace MultilinearSpace::make(const std::vector<GroupElem>& grades) {
  check_cap(grades.size());
  std::vector<GradedVar> vars;
  for (std::size_t i = 0; i < grades.size(); ++i)
    vars.push_back(GradedVar{static_cast<int>(i) + 1, grades[i]});
  return make_for(std::move(vars));
}

MultilinearSpace MultilinearSpace::make_for(std::vector<GradedVar> vars) {
  check_cap(vars.size());
  std::sort(vars.begin(), vars.end(), var_less);
  for (std::size_t i = 1; i < vars.size(); ++i)
    if (vars[i] == vars[i - 1]) throw DomainError("repeated variable in multilinear space");
  MultilinearSpace sp;
  sp.vars = std::move(vars);
  sp.basis = all_monomials(sp.vars);
  return sp;
}

int MultilinearSpace::index_of(const Term& t) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), t, term_less);
  if (it != basis.end() && *it == t) return static_cast<int>(it - basis.begin());
  return -1;
}

QVec MultilinearSpace::coeff_vector(const Poly& f) const {
  QVec v(basis.size(), Rational(0));
  for (const auto& [c, t] : f.monomials()) {
    int i = index_of(t);
    if (i < 0) throw DomainError("monomial outside the multilinear space: " + t.str());
    v[i] = c;
  }
  return v;
}

Poly MultilinearSpace::from_vector(const QVec& v) const {
  if (v.size() != basis.size()) throw DimensionError("vector width mismatch");
  std::vector<std::pair<Rational, Term>> ms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) ms.emplace_back(v[i], basis[i]);
  return Poly::from_terms(std::move(ms));
}

namespace {

// coefficient-and-basis-label evaluation of a multilinear monomial under a
// basis substitution (components are spanned by basis elements, so a
// monomial evaluates to a rational multiple of one basis element)
std::pair<Rational, int> eval_basis(const CayleyDickson& alg, const Term& t,
                                    const std::map<GradedVar, int, VarLess>& asg) {
  if (t.is_leaf()) return {Rational(1), asg.at(t.var())};
  auto [cl, bl] = eval_basis(alg, t.left(), asg);
  auto [cr, br] = eval_basis(alg, t.right(), asg);
  const auto& e = alg.table(bl, br);
  return {cl * cr * e.coeff, e.basis};
}

// dense evaluation rows over (tuple x coordinate) columns
std::vector<QVec> evaluation_rows(const MultilinearSpace& sp, const CayleyDickson& alg,
                                  const Grading& g, int* out_cols) {
  check_var_ranks(sp.vars, g);
  std::vector<std::vector<int>> choices;
  for (const auto& v : sp.vars) choices.push_back(g.component_basis(v.grade));
  long tuples = 1;
  for (const auto& c : choices) tuples *= static_cast<long>(c.size());
  int cols = static_cast<int>(tuples) * alg.dim();
  std::vector<QVec> rows(sp.basis.size(), QVec(cols, Rational(0)));
  std::vector<int> idx(sp.vars.size(), 0);
  long tuple_no = 0;
  while (true) {
    std::map<GradedVar, int, VarLess> asg;
    for (std::size_t i = 0; i < sp.vars.size(); ++i) asg[sp.vars[i]] = choices[i][idx[i]];
    for (std::size_t d = 0; d < sp.basis.size(); ++d) {
      auto [c, b] = eval_basis(alg, sp.basis[d], asg);
      if (c != 0) rows[d][tuple_no * alg.dim() + b] += c;
    }
    ++tuple_no;
    std::size_t k = sp.vars.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (idx[k] + 1 < static_cast<int>(choices[k].size())) {
        ++idx[k];
        for (std::size_t j = k + 1; j < sp.vars.size(); ++j) idx[j] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  if (out_cols) *out_cols = cols;
  return rows;
}

Term substitute_hole(const Term& ctx, const Term& filler) {
  if (ctx.is_leaf()) {
    if (ctx.var().id == -1) return filler;
    return ctx;
  }
  return Term::mul(substitute_hole(ctx.left(), filler), substitute_hole(ctx.right(), filler));
}

std::string sparse_key(const std::map<int, Rational>& v) {
  std::string key;
  for (const auto& [i, c] : v) key += std::to_string(i) + ":" + rat_str(c) + ";";
  return key;
}

}  // namespace

void enumerate_instances(const std::vector<Rule>& gens, const MultilinearSpace& sp,
                         const std::function<bool(const Poly&)>& visit) {
  int n = sp.degree();
  int rank = sp.vars.front().grade.rank();
  GradedVar hole{-1, GroupElem::zero(rank)};
  for (const Rule& rule : gens) {
    int k = rule.arity;
    if (k > n) continue;
    // assignment of each variable to a slot (0..k-1) or the context (k)
    std::vector<int> where(n, 0);
    while (true) {
      bool ok = true;
      std::vector<std::vector<GradedVar>> blocks(k);
      std::vector<GradedVar> ctx_vars;
      for (int i = 0; i < n; ++i) {
        if (where[i] < k)
          blocks[where[i]].push_back(sp.vars[i]);
        else
          ctx_vars.push_back(sp.vars[i]);
      }
      for (const auto& b : blocks)
        if (b.empty()) ok = false;
      if (ok) {
        std::vector<GroupElem> grades;
        for (const auto& b : blocks) {
          GroupElem gsum = GroupElem::zero(rank);
          for (const auto& v : b) gsum = gsum + v.grade;
          grades.push_back(gsum);
        }
        if (rule.cond(grades)) {
          std::vector<std::vector<Term>> block_monos;
          for (const auto& b : blocks) block_monos.push_back(all_monomials(b));
          std::vector<Term> contexts;
          if (ctx_vars.empty()) {
            contexts.push_back(Term::leaf(hole));
          } else {
            std::vector<GradedVar> with_hole = ctx_vars;
            with_hole.push_back(hole);
            for (const auto& c : all_monomials(with_hole)) {
              // keep contexts with exactly one hole (all_monomials on a set
              // with distinct vars has each exactly once)
              contexts.push_back(c);
            }
          }
          std::vector<std::size_t> pick(k, 0);
          while (true) {
            std::vector<Term> bind;
            for (int i = 0; i < k; ++i) bind.push_back(block_monos[i][pick[i]]);
            Poly inst = rule.poly_instance(bind);
            for (const auto& ctx : contexts) {
              std::vector<std::pair<Rational, Term>> ms;
              for (const auto& [c, t] : inst.monomials())
                ms.emplace_back(c, substitute_hole(ctx, t));
              Poly embedded = Poly::from_terms(std::move(ms));
              if (!embedded.is_zero())
                if (!visit(embedded)) return;
            }
            std::size_t j = 0;
            while (j < pick.size() && pick[j] + 1 == block_monos[j].size()) pick[j++] = 0;
            if (j == pick.size()) break;
            ++pick[j];
          }
        }
      }
      int i = 0;
      while (i < n && where[i] == k) where[i++] = 0;
      if (i == n) break;
      ++where[i];
    }
  }
}

Subspace consequence_space(const std::vector<Rule>& gens, const MultilinearSpace& sp) {
  Subspace sub{RowSpace(sp.dim())};
  std::set<std::string> seen;
  enumerate_instances(gens, sp, [&](const Poly& inst) {
    std::map<int, Rational> sparse;
    for (const auto& [c, t] : inst.monomials()) {
      int i = sp.index_of(t);
      if (i < 0) throw InternalError("instance leaves the multilinear space");
      sparse[i] = c;
    }
    if (!seen.insert(sparse_key(sparse)).second) return true;
    QVec v(sp.dim(), Rational(0));
    for (const auto& [i, c] : sparse) v[i] = c;
    sub.rows.insert(std::move(v));
    return true;
  });
  return sub;
}

Subspace identity_space(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g) {
  int cols = 0;
  auto rows = evaluation_rows(sp, alg, g, &cols);
  return Subspace{left_nullspace(rows, cols)};
}

CertifyCell certify_equality(const std::vector<Rule>& gens, const MultilinearSpace& sp,
                             const CayleyDickson& alg, const Grading& g) {
  CertifyCell cell;
  for (const auto& v : sp.vars) cell.grades.push_back(v.grade);
  cell.dim_ambient = sp.dim();
  Subspace id = identity_space(sp, alg, g);
  cell.dim_id = id.dim();
  const auto& id_rows = id.rows.rows();
  const auto& pivots = id.rows.pivots();
  std::vector<int> pivot_index(sp.dim(), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_index[pivots[r]] = static_cast<int>(r);

  RowSpace cons(cell.dim_id);  // in identity-pivot coordinates
  std::set<std::string> seen;
  enumerate_instances(gens, sp, [&](const Poly& inst) {
    if (cons.rank() == cell.dim_id) return false;  // saturated: equality certified
    std::map<int, Rational> sparse;
    for (const auto& [c, t] : inst.monomials()) {
      int i = sp.index_of(t);
      if (i < 0) throw InternalError("instance leaves the multilinear space");
      sparse[i] = c;
    }
    if (!seen.insert(sparse_key(sparse)).second) return true;
    // soundness: the instance must lie in the identity kernel; since it is
    // sparse, its span membership is checked by direct reconstruction from
    // the pivot coordinates
    QVec residual(sp.dim(), Rational(0));
    for (const auto& [i, c] : sparse) residual[i] = c;
    QVec coords(cell.dim_id, Rational(0));
    for (const auto& [i, c] : sparse) {
      if (pivot_index[i] < 0) continue;
      coords[pivot_index[i]] = c;
      const QVec& row = id_rows[pivot_index[i]];
      for (int j = 0; j < sp.dim(); ++j)
        if (row[j] != 0) residual[j] -= c * row[j];
    }
    if (!vec_is_zero(residual))
      throw InternalError("consequence instance escapes the identity space (soundness breach)");
    cons.insert(std::move(coords));
    return true;
  });
  cell.dim_cons = cons.rank();
  cell.equal = cell.dim_cons == cell.dim_id;
  if (!cell.equal) {
    for (int r = 0; r < cell.dim_id; ++r) {
      QVec unit(cell.dim_id, Rational(0));
      unit[r] = 1;
      QVec res = cons.reduce(std::move(unit));
      if (vec_is_zero(res)) continue;
      // expand the residual back to monomial coordinates
      QVec full(sp.dim(), Rational(0));
      for (int j = 0; j < cell.dim_id; ++j) {
        if (res[j] == 0) continue;
        for (int c = 0; c < sp.dim(); ++c)
          if (id_rows[j][c] != 0) full[c] += res[j] * id_rows[j][c];
      }
      cell.deficit.push_back(sp.from_vector(full));
      // avoid listing the same direction repeatedly
      cons.insert(std::move(res));
      if (cons.rank() == cell.dim_id) break;
    }
  }
  return cell;
}

bool membership(const Poly& f, const std::vector<Rule>& gens) {
  if (f.is_zero()) return true;
  if (!is_multilinear(f)) throw DomainError("membership needs multilinear input");
  MultilinearSpace sp = MultilinearSpace::make_for(poly_vars(f));
  QVec target = sp.coeff_vector(f);
  Subspace cons{RowSpace(sp.dim())};
  std::set<std::string> seen;
  bool found = false;
  enumerate_instances(gens, sp, [&](const Poly& inst) {
    std::map<int, Rational> sparse;
    for (const auto& [c, t] : inst.monomials()) {
      int i = sp.index_of(t);
      if (i < 0) throw InternalError("instance leaves the multilinear space");
      sparse[i] = c;
    }
    if (!seen.insert(sparse_key(sparse)).second) return true;
    QVec v(sp.dim(), Rational(0));
    for (const auto& [i, c] : sparse) v[i] = c;
    if (cons.rows.insert(std::move(v)) && cons.rows.contains(target)) {
      found = true;
      return false;
    }
    return true;
  });
  return found || cons.rows.contains(target);
}

bool shirshov_span_check(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g,
                         const VariableOrder& less) {
  int cols = 0;
  auto rows = evaluation_rows(sp, alg, g, &cols);
  RowSpace span(cols);
  for (std::size_t d = 0; d < sp.basis.size(); ++d)
    if (is_regular_r2(sp.basis[d], less)) span.insert(rows[d]);
  for (std::size_t d = 0; d < sp.basis.size(); ++d)
    if (!span.contains(rows[d])) return false;
  return true;
}

bool shirshov_span_check(const MultilinearSpace& sp, const CayleyDickson& alg, const Grading& g) {
  return shirshov_span_check(sp, alg, g,
                             [](const GradedVar& a, const GradedVar& b) { return var_less(a, b); });
}

namespace {

std::vector<std::vector<GroupElem>> all_grade_tuples(int rank, int n) {
  std::vector<std::vector<GroupElem>> out;
  auto elems = all_elements(rank);
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<GroupElem> tup;
    for (int i : idx) tup.push_back(elems[i]);
    out.push_back(std::move(tup));
    int k = n - 1;
    while (k >= 0 && idx[k] + 1 == static_cast<int>(elems.size())) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return out;
}

std::string orbit_key(std::vector<GroupElem> tup) {
  std::sort(tup.begin(), tup.end(), group_less);
  std::string key;
  for (const auto& e : tup) key += std::to_string(e.bits()) + ",";
  return key;
}

}  // namespace

CertifyReport certify_all(const std::vector<Rule>& gens, int max_n, const CayleyDickson& alg,
                          const Grading& g, bool use_orbits) {
  CertifyReport report;
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::string, CertifyCell> reps;
    for (auto& tup : all_grade_tuples(g.group_rank(), n)) {
      CertifyCell cell;
      std::string key = orbit_key(tup);
      auto it = reps.find(key);
      if (use_orbits && it != reps.end()) {
        // permutation-equivariant transport from the orbit representative;
        // deficit bases are reported for representatives only
        cell = it->second;
        cell.grades = tup;
        cell.deficit.clear();
      } else {
        cell = certify_equality(gens, MultilinearSpace::make(tup), alg, g);
        if (use_orbits) reps.emplace(key, cell);
      }
      if (!cell.equal) report.all_equal = false;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::string certify_tsv(const CertifyReport& report) {
  std::ostringstream out;
  out << "grades\tdim_ambient\tdim_cons\tdim_id\tequal\n";
  for (const auto& cell : report.cells) {
    std::string gs;
    for (std::size_t i = 0; i < cell.grades.size(); ++i) {
      if (i) gs += ";";
      gs += cell.grades[i].str();
    }
    out << gs << "\t" << cell.dim_ambient << "\t" << cell.dim_cons << "\t" << cell.dim_id
        << "\t" << (cell.equal ? 1 : 0) << "\n";
  }
  return out.str();
}

bool shirshov_all(int max_n, const CayleyDickson& alg, const Grading& g, bool use_orbits) {
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> done;
    for (auto& tup : all_grade_tuples(g.group_rank(), n)) {
      if (use_orbits && !done.insert(orbit_key(tup)).second) continue;
      if (!shirshov_span_check(MultilinearSpace::make(tup), alg, g)) return false;
    }
  }
  return true;
}

}  // namespace octgi

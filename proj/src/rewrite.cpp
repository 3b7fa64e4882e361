#include "octgi/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "octgi/checker.hpp"
#include "octgi/linalg.hpp"

namespace octgi {

Term slot(int i) { return Term::leaf(GradedVar{i, GroupElem::zero(1)}); }

Term instantiate(const Term& pattern, const std::vector<Term>& bind) {
  if (pattern.is_leaf()) return bind.at(pattern.var().id);
  return Term::mul(instantiate(pattern.left(), bind), instantiate(pattern.right(), bind));
}

namespace {

bool match_pattern(const Term& pat, const Term& t, std::vector<Term>& bind) {
  if (pat.is_leaf()) {
    Term& b = bind[pat.var().id];
    if (b.valid()) return b == t;
    b = t;
    return true;
  }
  if (t.is_leaf()) return false;
  return match_pattern(pat.left(), t.left(), bind) &&
         match_pattern(pat.right(), t.right(), bind);
}

std::vector<Term> fresh_leaves(const std::vector<GroupElem>& grades) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < grades.size(); ++i)
    out.push_back(Term::leaf(GradedVar{static_cast<int>(i), grades[i]}));
  return out;
}

}  // namespace

Poly Rule::identity_poly(const std::vector<GroupElem>& grades) const {
  return poly_instance(fresh_leaves(grades));
}

Poly Rule::poly_instance(const std::vector<Term>& bind) const {
  std::vector<std::pair<Rational, Term>> ms;
  ms.emplace_back(Rational(1), instantiate(lhs, bind));
  for (const auto& [c, t] : rhs) ms.emplace_back(-c, instantiate(t, bind));
  return Poly::from_terms(std::move(ms));
}

void verify_rule(const Rule& r, const CayleyDickson& alg, const Grading& g) {
  auto elems = all_elements(g.group_rank());
  std::vector<int> idx(r.arity, 0);
  long checked = 0;
  while (true) {
    std::vector<GroupElem> grades;
    for (int i : idx) grades.push_back(elems[i]);
    if (r.cond(grades)) {
      Poly f = r.identity_poly(grades);
      bool ok = is_multilinear(f) ? is_identity_multilinear(f, alg, g).identity
                                  : is_identity_generic(f, alg, g);
      if (!ok) {
        std::string asg;
        for (const auto& gr : grades) asg += gr.str();
        throw InternalError("rule " + r.name + " is not an identity at grades " + asg);
      }
      ++checked;
    }
    int k = r.arity - 1;
    while (k >= 0 && idx[k] + 1 == static_cast<int>(elems.size())) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  if (checked == 0) throw InternalError("rule " + r.name + " has an unsatisfiable condition");
}

namespace {

Term P0() { return slot(0); }
Term P1() { return slot(1); }
Term P2() { return slot(2); }
Term P3() { return slot(3); }
Term m(const Term& a, const Term& b) { return Term::mul(a, b); }

int ord2(const std::vector<GroupElem>& g, int i, int j) { return generated_order({g[i], g[j]}); }
int ord3(const std::vector<GroupElem>& g, int i, int j, int k) {
  return generated_order({g[i], g[j], g[k]});
}

Rule make_rule(std::string name, int number, int arity, Term lhs,
               std::vector<std::pair<Rational, Term>> rhs,
               std::function<bool(const std::vector<GroupElem>&)> cond, bool derived = false) {
  Rule r;
  r.name = std::move(name);
  r.number = number;
  r.arity = arity;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.cond = std::move(cond);
  r.derived = derived;
  return r;
}

std::vector<Rule> catalog_z2_3() {
  std::vector<Rule> rules;
  rules.push_back(make_rule("eq1-comutativa", 1, 2, m(P0(), P1()), {{1, m(P1(), P0())}},
                            [](const auto& g) { return ord2(g, 0, 1) <= 2; }));
  rules.push_back(make_rule("eq2-anti-comutativa", 2, 2, m(P0(), P1()), {{-1, m(P1(), P0())}},
                            [](const auto& g) { return ord2(g, 0, 1) >= 4; }));
  rules.push_back(make_rule("eq3-associativa", 3, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P1(), P2()))}},
                            [](const auto& g) { return ord3(g, 0, 1, 2) <= 4; }));
  rules.push_back(make_rule("eq4-anti-associativa", 4, 3, m(m(P0(), P1()), P2()),
                            {{-1, m(P0(), m(P1(), P2()))}},
                            [](const auto& g) { return ord3(g, 0, 1, 2) == 8; }));
  return rules;
}

// Generators of I, slots in the equations' letter order.
std::vector<Rule> catalog_I() {
  std::vector<Rule> rules;
  // (5) ab.v = v.ba ; g(v) != 0 != g(a) = g(b)   [slots a,b,v]
  rules.push_back(make_rule("eq5-cocomuta", 5, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P2(), m(P1(), P0()))}}, [](const auto& g) {
                              return !g[2].is_zero() && !g[0].is_zero() && g[0] == g[1];
                            }));
  // (6) (ax.b)v = v(ba.x) ; g(v) != 0 = g(x) != g(a) = g(b)   [slots a,x,b,v]
  rules.push_back(make_rule("eq6-cocomuta2", 6, 4, m(m(m(P0(), P1()), P2()), P3()),
                            {{1, m(P3(), m(m(P2(), P0()), P1()))}}, [](const auto& g) {
                              return !g[3].is_zero() && g[1].is_zero() && !g[0].is_zero() &&
                                     g[0] == g[2];
                            }));
  // (7) v(ax.b) = (ba.x)v ; same condition   [slots a,x,b,v]
  rules.push_back(make_rule("eq7-cocomuta3", 7, 4, m(P3(), m(m(P0(), P1()), P2())),
                            {{1, m(m(m(P2(), P0()), P1()), P3())}}, [](const auto& g) {
                              return !g[3].is_zero() && g[1].is_zero() && !g[0].is_zero() &&
                                     g[0] == g[2];
                            }));
  // (8) x o y = 0 ; <g(x),g(y)> = Z2^2   [slots x,y]
  rules.push_back(make_rule("eq8-antcom", 8, 2, m(P0(), P1()), {{-1, m(P1(), P0())}},
                            [](const auto& g) { return ord2(g, 0, 1) == 4; }));
  // (9) vb.a = v.ab ; g(v) not in <g(a),g(b)>   [slots v,b,a]
  rules.push_back(make_rule("eq9-entdir", 9, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P2(), P1()))}}, [](const auto& g) {
                              return !generated_contains({g[2], g[1]}, g[0]);
                            }));
  // (10) a.vb = v.ba ; <g(v),g(b)> = Z2^2, g(a) = 0   [slots a,v,b]
  rules.push_back(make_rule("eq10-entesq0", 10, 3, m(P0(), m(P1(), P2())),
                            {{1, m(P1(), m(P2(), P0()))}}, [](const auto& g) {
                              return g[0].is_zero() && ord2(g, 1, 2) == 4;
                            }));
  // (11) va.w + wa.v = -(v o w)a ; g(v),g(w) not in <g(a)> != (0)   [slots v,a,w]
  rules.push_back(make_rule("eq11-lokao2", 11, 3, m(m(P0(), P1()), P2()),
                            {{-1, m(m(P2(), P1()), P0())},
                             {-1, m(m(P0(), P2()), P1())},
                             {-1, m(m(P2(), P0()), P1())}},
                            [](const auto& g) {
                              return !g[1].is_zero() &&
                                     !generated_contains({g[1]}, g[0]) &&
                                     !generated_contains({g[1]}, g[2]);
                            }));
  // (12) va.wb + wa.vb = -(v o w)ba ; g(v),g(w) not in <g(a)(!=0),g(b)>  [slots v,a,w,b]
  rules.push_back(make_rule("eq12-idnova", 12, 4, m(m(P0(), P1()), m(P2(), P3())),
                            {{-1, m(m(P2(), P1()), m(P0(), P3()))},
                             {-1, m(m(P0(), P2()), m(P3(), P1()))},
                             {-1, m(m(P2(), P0()), m(P3(), P1()))}},
                            [](const auto& g) {
                              return !g[1].is_zero() &&
                                     !generated_contains({g[1], g[3]}, g[0]) &&
                                     !generated_contains({g[1], g[3]}, g[2]);
                            }));
  // (13) (x,y,z) = 0 ; |<g(x),g(y),g(z)>| <= 2
  rules.push_back(make_rule("eq13-ass", 13, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P1(), P2()))}},
                            [](const auto& g) { return ord3(g, 0, 1, 2) <= 2; }));
  // (14) [x,y] = 0 ; g(x) = g(y) = 0
  rules.push_back(make_rule("eq14-com", 14, 2, m(P0(), P1()), {{1, m(P1(), P0())}},
                            [](const auto& g) { return g[0].is_zero() && g[1].is_zero(); }));
  return rules;
}

std::vector<Rule> catalog_derived() {
  std::vector<Rule> rules;
  // linearizations of (15): (x,z,y) + (z,x,y) = 0 and (x,y,z) + (x,z,y) = 0
  rules.push_back(make_rule("eq15-alt-linear-left", 15, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P1(), P2()))},
                             {-1, m(m(P1(), P0()), P2())},
                             {1, m(P1(), m(P0(), P2()))}},
                            [](const auto&) { return true; }, true));
  rules.push_back(make_rule("eq15-alt-linear-right", 15, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P1(), P2()))},
                             {-1, m(m(P0(), P2()), P1())},
                             {1, m(P0(), m(P2(), P1()))}},
                            [](const auto&) { return true; }, true));
  // (16) v.wb + w.vb = (v o w)b ; g(v),g(w) not in <g(b)>   [slots v,w,b]
  rules.push_back(make_rule("eq16-lokao", 16, 3, m(P0(), m(P1(), P2())),
                            {{-1, m(P1(), m(P0(), P2()))},
                             {1, m(m(P0(), P1()), P2())},
                             {1, m(m(P1(), P0()), P2())}},
                            [](const auto& g) {
                              return !generated_contains({g[2]}, g[0]) &&
                                     !generated_contains({g[2]}, g[1]);
                            },
                            true));
  return rules;
}

// full alternativity for the display catalog (repeated slots; generic check)
std::vector<Rule> catalog_alt() {
  std::vector<Rule> rules;
  rules.push_back(make_rule("eq15a-alt", 15, 2, m(m(P0(), P0()), P1()),
                            {{1, m(P0(), m(P0(), P1()))}}, [](const auto&) { return true; },
                            true));
  rules.push_back(make_rule("eq15b-alt", 15, 2, m(m(P0(), P1()), P1()),
                            {{1, m(P0(), m(P1(), P1()))}}, [](const auto&) { return true; },
                            true));
  return rules;
}

}  // namespace

std::vector<Rule> ruleset_z2_3(const CayleyDickson& alg) {
  if (alg.rank() != 3) throw DomainError("the Z2^3 rule set needs the octonion level");
  std::vector<Rule> rules = catalog_z2_3();
  Grading fine = Grading::fine(3);
  for (const auto& r : rules) verify_rule(r, alg, fine);
  return rules;
}

std::vector<Rule> ruleset_I(const CayleyDickson& alg) {
  if (alg.rank() != 3) throw DomainError("the ideal I lives over the octonion level");
  std::vector<Rule> rules = catalog_I();
  Grading coarse = Grading::coarse(3);
  for (const auto& r : rules) verify_rule(r, alg, coarse);
  return rules;
}

std::vector<Rule> derived_rules(const CayleyDickson& alg) {
  if (alg.rank() != 3) throw DomainError("derived rules live over the octonion level");
  std::vector<Rule> rules = catalog_derived();
  Grading coarse = Grading::coarse(3);
  for (const auto& r : rules) verify_rule(r, alg, coarse);
  return rules;
}

std::vector<CatalogEntry> identity_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : catalog_z2_3())
    out.push_back({r.number, std::to_string(r.number), r, 3});
  for (const auto& r : catalog_I()) out.push_back({r.number, std::to_string(r.number), r, 2});
  auto alt = catalog_alt();
  out.push_back({15, "15a", alt[0], 2});
  out.push_back({15, "15b", alt[1], 2});
  for (const auto& r : catalog_derived())
    if (r.number == 16) out.push_back({16, "16", r, 2});
  return out;
}

// ---------------------------------------------------------------------------
// Z2^3 normal form

namespace {

class Z23Normalizer {
public:
  explicit Z23Normalizer(const Term& t) : cur_(t), sign_(1) {}

  NormalizeResult run() {
    normalize_at("");
    return {sign_, cur_, std::move(trace_)};
  }

private:
  Term subterm_at(const Term& t, const std::string& p, std::size_t k = 0) const {
    if (k == p.size()) return t;
    return subterm_at(p[k] == '0' ? t.left() : t.right(), p, k + 1);
  }
  Term replace_at(const Term& t, const std::string& p, const Term& sub, std::size_t k = 0) const {
    if (k == p.size()) return sub;
    if (p[k] == '0') return Term::mul(replace_at(t.left(), p, sub, k + 1), t.right());
    return Term::mul(t.left(), replace_at(t.right(), p, sub, k + 1));
  }
  static std::string pretty(const std::string& p) {
    if (p.empty()) return ".";
    std::string s;
    for (char c : p) {
      s += '.';
      s += c;
    }
    return s;
  }

  void apply_comm(const std::string& p) {
    Term s = subterm_at(cur_, p);
    int mu = SchemeFns::mu(s.left().g_degree(), s.right().g_degree());
    sign_ *= mu;
    cur_ = replace_at(cur_, p, Term::mul(s.right(), s.left()));
    trace_.push_back({mu > 0 ? "eq1-comutativa" : "eq2-anti-comutativa", pretty(p)});
  }
  void apply_fold(const std::string& p) {
    // X (Y Z) -> (X Y) Z, sign nu
    Term s = subterm_at(cur_, p);
    Term x = s.left(), y = s.right().left(), z = s.right().right();
    int nu = SchemeFns::nu(x.g_degree(), y.g_degree(), z.g_degree());
    sign_ *= nu;
    cur_ = replace_at(cur_, p, Term::mul(Term::mul(x, y), z));
    trace_.push_back({nu > 0 ? "eq3-associativa" : "eq4-anti-associativa", pretty(p)});
  }
  void apply_unfold(const std::string& p) {
    // (X Y) Z -> X (Y Z), sign nu
    Term s = subterm_at(cur_, p);
    Term x = s.left().left(), y = s.left().right(), z = s.right();
    int nu = SchemeFns::nu(x.g_degree(), y.g_degree(), z.g_degree());
    sign_ *= nu;
    cur_ = replace_at(cur_, p, Term::mul(x, Term::mul(y, z)));
    trace_.push_back({nu > 0 ? "eq3-associativa" : "eq4-anti-associativa", pretty(p)});
  }

  void normalize_at(const std::string& p) {
    if (subterm_at(cur_, p).is_leaf()) return;
    normalize_at(p + "0");
    normalize_at(p + "1");
    merge_at(p);
  }

  // both children at p are regular combs; merge them into one
  void merge_at(const std::string& p) {
    Term s = subterm_at(cur_, p);
    if (!s.right().is_leaf()) {
      apply_fold(p);  // V (S' y) -> (V S') y
      merge_at(p + "0");
      insert_at(p);
    } else {
      insert_at(p);
    }
  }

  // subterm at p is (comb C) * (leaf y): bubble y into C
  void insert_at(const std::string& p) {
    Term s = subterm_at(cur_, p);
    Term c = s.left();
    const GradedVar& y = s.right().var();
    if (c.is_leaf()) {
      if (var_less(y, c.var())) apply_comm(p);
      return;
    }
    const GradedVar& x = c.right().var();
    if (!var_less(y, x)) return;
    apply_unfold(p);      // (C' x) y -> C' (x y)
    apply_comm(p + "1");  // C' (x y) -> C' (y x)
    apply_fold(p);        // C' (y x) -> (C' y) x
    insert_at(p + "0");
  }

  Term cur_;
  int sign_;
  std::vector<RewriteStep> trace_;
};

}  // namespace

NormalizeResult normalize_z2_3(const Term& t) {
  // the sign schemes hold at every doubling level, so lower-rank fine
  // gradings (quaternions, K) normalize by the same recursion
  int rank = term_leaves(t).front().grade.rank();
  for (const auto& v : term_leaves(t))
    if (v.grade.rank() != rank) throw DomainError("mixed grade ranks in normalize");
  NormalizeResult res = Z23Normalizer(t).run();
  if (!is_regular_r1(res.word))
    throw InternalError("normalize produced a non-regular word");
  return res;
}

// ---------------------------------------------------------------------------
// Oriented Z2^2 engine

namespace {

std::vector<Rule> engine_orientations() {
  std::vector<Rule> rules;
  // nesting moves first, then sorts, then the v-movers
  rules.push_back(make_rule("eq13-ass", 13, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P1(), P2()))}},
                            [](const auto& g) { return ord3(g, 0, 1, 2) <= 2; }));
  rules.push_back(make_rule("eq9-entdir", 9, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P0(), m(P2(), P1()))}}, [](const auto& g) {
                              return !generated_contains({g[2], g[1]}, g[0]);
                            }));
  rules.push_back(make_rule("eq14-com", 14, 2, m(P0(), P1()), {{1, m(P1(), P0())}},
                            [](const auto& g) { return g[0].is_zero() && g[1].is_zero(); }));
  rules.push_back(make_rule("eq8-antcom", 8, 2, m(P0(), P1()), {{-1, m(P1(), P0())}},
                            [](const auto& g) { return ord2(g, 0, 1) == 4; }));
  rules.push_back(make_rule("eq5-cocomuta", 5, 3, m(m(P0(), P1()), P2()),
                            {{1, m(P2(), m(P1(), P0()))}}, [](const auto& g) {
                              return !g[2].is_zero() && !g[0].is_zero() && g[0] == g[1];
                            }));
  // (10) read right-to-left: v.(b a) -> a.(v b) with g(a)=0
  rules.push_back(make_rule("eq10-entesq0", 10, 3, m(P0(), m(P1(), P2())),
                            {{1, m(P2(), m(P0(), P1()))}}, [](const auto& g) {
                              return g[2].is_zero() && ord2(g, 0, 1) == 4;
                            }));
  rules.push_back(make_rule("eq6-cocomuta2", 6, 4, m(m(m(P0(), P1()), P2()), P3()),
                            {{1, m(P3(), m(m(P2(), P0()), P1()))}}, [](const auto& g) {
                              return !g[3].is_zero() && g[1].is_zero() && !g[0].is_zero() &&
                                     g[0] == g[2];
                            }));
  // (7) read right-to-left: (b a . x) v -> v (a x . b)
  rules.push_back(make_rule("eq7-cocomuta3", 7, 4, m(m(m(P0(), P1()), P2()), P3()),
                            {{1, m(P3(), m(m(P1(), P2()), P0()))}}, [](const auto& g) {
                              return !g[3].is_zero() && g[2].is_zero() && !g[0].is_zero() &&
                                     g[0] == g[1];
                            }));
  return rules;
}

}  // namespace

RewriteEngine::RewriteEngine(const CayleyDickson& alg) : rules_(engine_orientations()) {
  if (alg.rank() != 3)
    throw DomainError("the Z2^2 rewrite system lives over the octonion level");
  Grading coarse = Grading::coarse(alg.rank());
  for (const auto& r : rules_) verify_rule(r, alg, coarse);
}

bool RewriteEngine::step_monomial(Term& t, Rational& coeff, RewriteStep& step) const {
  // leftmost-innermost scan
  std::function<bool(Term&, const std::string&)> walk = [&](Term& node,
                                                            const std::string& path) -> bool {
    if (!node.is_leaf()) {
      Term l = node.left(), r = node.right();
      if (walk(l, path + "0")) {
        node = Term::mul(l, r);
        return true;
      }
      if (walk(r, path + "1")) {
        node = Term::mul(l, r);
        return true;
      }
    }
    for (const Rule& rule : rules_) {
      std::vector<Term> bind(rule.arity);
      if (!match_pattern(rule.lhs, node, bind)) continue;
      std::vector<GroupElem> grades;
      grades.reserve(bind.size());
      for (const auto& b : bind) grades.push_back(b.g_degree());
      if (!rule.cond(grades)) continue;
      Term out = instantiate(rule.rhs[0].second, bind);
      if (!term_less(out, node)) continue;  // gate: strict decrease
      node = out;
      coeff *= rule.rhs[0].first;
      std::string p;
      for (char c : path) {
        p += '.';
        p += c;
      }
      step = {rule.name, p.empty() ? "." : p};
      return true;
    }
    return false;
  };
  return walk(t, "");
}

RewriteResult RewriteEngine::rewrite(const Poly& f, long budget) const {
  RewriteResult res;
  std::vector<std::pair<Rational, Term>> out;
  for (const auto& [c0, t0] : f.monomials()) {
    Term t = t0;
    Rational c = c0;
    while (true) {
      if (res.steps >= budget) {
        res.normal = false;
        break;
      }
      RewriteStep st;
      if (!step_monomial(t, c, st)) break;
      ++res.steps;
      res.trace.push_back(std::move(st));
    }
    out.emplace_back(c, t);
  }
  res.out = Poly::from_terms(std::move(out));
  return res;
}

RewriteResult rewrite_modulo_I(const Poly& f, const CayleyDickson& alg, long budget) {
  return RewriteEngine(alg).rewrite(f, budget);
}

// ---------------------------------------------------------------------------
// Structured forms via exact generic-evaluation solves

namespace {

// Dense vectors of a family of generic evaluations over a shared column
// space (coordinate index x coefficient monomial).
struct Vectorizer {
  std::map<std::pair<int, SymPoly::Mono>, int> columns;
  std::vector<std::map<int, Rational>> sparse;

  int add(const GElem& e) {
    std::map<int, Rational> row;
    for (std::size_t i = 0; i < e.coords.size(); ++i)
      for (const auto& [mono, c] : e.coords[i].terms()) {
        auto key = std::make_pair(static_cast<int>(i), mono);
        auto [it, fresh] = columns.emplace(key, static_cast<int>(columns.size()));
        row[it->second] = c;
      }
    sparse.push_back(std::move(row));
    return static_cast<int>(sparse.size()) - 1;
  }

  QVec dense(int idx) const {
    QVec v(columns.size(), Rational(0));
    for (const auto& [j, c] : sparse[idx]) v[j] = c;
    return v;
  }
};

struct MultisetIter {
  // enumerates sub-multisets of `counts` (per distinct var), excluding empty
  std::vector<GradedVar> vars;
  std::vector<int> counts;
  std::vector<int> cur;
  bool done = false;

  explicit MultisetIter(const std::map<GradedVar, int, VarLess>& m) {
    for (const auto& [v, n] : m) {
      vars.push_back(v);
      counts.push_back(n);
    }
    cur.assign(vars.size(), 0);
  }
  bool next() {
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == counts[k]) cur[k++] = 0;
    if (k == cur.size()) {
      done = true;
      return false;
    }
    ++cur[k];
    return true;
  }
  std::vector<GradedVar> selected() const {
    std::vector<GradedVar> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (int k = 0; k < cur[i]; ++k) out.push_back(vars[i]);
    return out;
  }
  std::map<GradedVar, int, VarLess> remaining() const {
    std::map<GradedVar, int, VarLess> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (counts[i] - cur[i] > 0) out[vars[i]] = counts[i] - cur[i];
    return out;
  }
};

GroupElem multiset_grade(const std::vector<GradedVar>& vars, int rank) {
  GroupElem g = GroupElem::zero(rank);
  for (const auto& v : vars) g = g + v.grade;
  return g;
}

constexpr std::size_t kShapeSpaceCap = 200000;

}  // namespace

ZeroTopForm zero_top_form(const Poly& f, const GradedVar& x, const CayleyDickson& alg,
                          const Grading& g) {
  ZeroTopForm out;
  if (f.is_zero()) throw DomainError("zero_top_form of the zero polynomial");
  if (!is_multihomogeneous(f)) throw DomainError("zero_top_form needs multihomogeneous input");
  if (!x.grade.is_zero()) throw DomainError("zero_top_form: g(x) must be zero");
  auto vars = poly_vars(f);
  check_var_ranks(vars, g);
  if (vars.empty() || !(vars.back() == x))
    throw DomainError("zero_top_form: x must be the greatest variable of f");
  Degrees deg = degrees(f.monomials().front().second);
  int n = deg.per_var.at(x);
  out.n = n;
  GroupElem gf = f.monomials().front().second.g_degree();
  out.grade_zero_case = gf.is_zero();

  std::map<GradedVar, int, VarLess> rest = deg.per_var;
  rest.erase(x);
  Term xl = Term::leaf(x);

  // shape candidates with slot metadata
  struct Cand {
    int i;
    Term y, z;
    bool pair;
    Term shape;
  };
  std::vector<Cand> cands;

  if (!out.grade_zero_case) {
    std::vector<GradedVar> rest_list;
    for (const auto& [v, k] : rest)
      for (int c = 0; c < k; ++c) rest_list.push_back(v);
    if (rest_list.empty()) {
      out.flag = "no remaining variables for a nonzero-grade form";
      return out;
    }
    for (int i = 0; i <= n; ++i)
      for (const auto& y : all_monomials(rest_list)) {
        Term t = y;
        for (int k = 0; k < i; ++k) t = Term::mul(xl, t);
        for (int k = 0; k < n - i; ++k) t = Term::mul(t, xl);
        cands.push_back({i, y, Term(), false, t});
        if (cands.size() > kShapeSpaceCap) {
          out.flag = "shape space too large";
          return out;
        }
      }
  } else {
    MultisetIter it(rest);
    while (it.next()) {
      auto m1 = it.selected();
      auto rem = it.remaining();
      if (rem.empty()) continue;  // both sides must be nonempty
      std::vector<GradedVar> m2;
      for (const auto& [v, k] : rem)
        for (int c = 0; c < k; ++c) m2.push_back(v);
      GroupElem g1 = multiset_grade(m1, g.group_rank());
      GroupElem g2 = multiset_grade(m2, g.group_rank());
      if (g1.is_zero() || !(g1 == g2)) continue;
      for (int i = 0; i <= n; ++i)
        for (const auto& y : all_monomials(m1))
          for (const auto& z : all_monomials(m2)) {
            Term a = y, b = z;
            for (int k = 0; k < i; ++k) a = Term::mul(a, xl);
            for (int k = 0; k < n - i; ++k) b = Term::mul(b, xl);
            cands.push_back({i, y, z, true, Term::mul(a, b)});
            if (cands.size() > kShapeSpaceCap) {
              out.flag = "shape space too large";
              return out;
            }
          }
    }
    if (cands.empty()) {
      out.flag = "no admissible pair slots (nonzero-grade split of the remaining variables)";
      return out;
    }
  }

  // monomials of f already in shape are taken verbatim (so slot contents of
  // an identity are not collapsed to zero); only the remainder is solved in
  // the exact generic-evaluation space
  QVec coeffs(cands.size(), Rational(0));
  Poly rest_poly = f;
  {
    std::map<std::size_t, std::size_t> shape_index;  // term hash -> candidate
    for (std::size_t k = 0; k < cands.size(); ++k)
      shape_index.emplace(cands[k].shape.hash(), k);
    std::vector<std::pair<Rational, Term>> matched;
    for (const auto& [c, t] : f.monomials()) {
      auto it = shape_index.find(t.hash());
      if (it != shape_index.end() && cands[it->second].shape == t) {
        coeffs[it->second] += c;
        matched.emplace_back(c, t);
      }
    }
    rest_poly = f - Poly::from_terms(std::move(matched));
  }
  if (!rest_poly.is_zero()) {
    auto asg = generic_assignment(alg, g, vars);
    Vectorizer vec;
    std::vector<int> rows;
    rows.reserve(cands.size());
    for (const auto& c : cands)
      rows.push_back(vec.add(eval_poly(alg, Poly::monomial(1, c.shape), asg)));
    int frow = vec.add(eval_poly(alg, rest_poly, asg));
    std::vector<QVec> mat;
    mat.reserve(rows.size());
    for (int r : rows) mat.push_back(vec.dense(r));
    auto sol = solve_combination(mat, vec.dense(frow));
    if (!sol) {
      out.flag = "no evaluation-equal combination in the slot shape space";
      return out;
    }
    for (std::size_t k = 0; k < cands.size(); ++k) coeffs[k] += (*sol)[k];
  }

  std::vector<std::pair<Rational, Term>> re;
  out.y.assign(n + 1, Poly::zero());
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    re.emplace_back(c, cands[k].shape);
    if (cands[k].pair)
      out.pairs.push_back({cands[k].i, c, cands[k].y, cands[k].z});
    else
      out.y[cands[k].i] = out.y[cands[k].i] + Poly::monomial(c, cands[k].y);
  }
  out.reassembled = Poly::from_terms(std::move(re));
  out.ok = true;
  return out;
}

NonzeroTopForm nonzero_top_form(const Poly& f, const GradedVar& x, const CayleyDickson& alg,
                                const Grading& g) {
  NonzeroTopForm out;
  if (f.is_zero()) throw DomainError("nonzero_top_form of the zero polynomial");
  if (!is_multihomogeneous(f))
    throw DomainError("nonzero_top_form needs multihomogeneous input");
  if (x.grade.is_zero()) throw DomainError("nonzero_top_form: g(x) must be nonzero");
  auto vars = poly_vars(f);
  check_var_ranks(vars, g);
  if (vars.empty() || !(vars.back() == x))
    throw DomainError("nonzero_top_form: x must be the greatest variable of f");
  for (const auto& v : vars)
    if (v.grade.is_zero())
      throw DomainError("nonzero_top_form: zero-component variables must be absent");
  GroupElem h = x.grade;
  Degrees deg = degrees(f.monomials().front().second);
  int n = deg.per_var.at(x);
  out.n = n;
  GroupElem gf = f.monomials().front().second.g_degree();
  bool case_a = generated_contains({h}, gf);
  out.split_case = !case_a;

  std::map<GradedVar, int, VarLess> rest = deg.per_var;
  rest.erase(x);
  Term xl = Term::leaf(x);

  // ordered partitions of a multiset into `parts` nonempty grade-h blocks
  std::function<std::vector<std::vector<std::vector<GradedVar>>>(
      const std::map<GradedVar, int, VarLess>&, int)>
      partitions = [&](const std::map<GradedVar, int, VarLess>& pool,
                       int parts) -> std::vector<std::vector<std::vector<GradedVar>>> {
    std::vector<std::vector<std::vector<GradedVar>>> result;
    if (parts == 0) {
      if (pool.empty()) result.push_back({});
      return result;
    }
    MultisetIter it(pool);
    while (it.next()) {
      auto block = it.selected();
      if (!(multiset_grade(block, g.group_rank()) == h)) continue;
      for (auto tail : partitions(it.remaining(), parts - 1)) {
        tail.insert(tail.begin(), block);
        result.push_back(std::move(tail));
      }
    }
    return result;
  };

  struct Cand {
    NonzeroSlot slot;
  };
  std::vector<Cand> cands;
  auto push_cand = [&](NonzeroSlot s) {
    cands.push_back({std::move(s)});
    if (cands.size() > kShapeSpaceCap) throw DomainError("shape space too large");
  };

  // builds the P/H slot trees over a block list, then appends trailing x's
  auto assemble = [&](char family, int i, const std::vector<Term>& blocks) {
    Term t;
    if (family == 'P') {
      t = blocks[0];
      for (std::size_t l = 1; l < blocks.size(); ++l)
        t = Term::mul(Term::mul(t, xl), blocks[l]);
    } else {
      t = xl;
      t = Term::mul(t, blocks[0]);
      for (std::size_t l = 1; l < blocks.size(); ++l)
        t = Term::mul(Term::mul(t, xl), blocks[l]);
    }
    for (int k = 0; k < n - i; ++k) t = Term::mul(t, xl);
    return t;
  };

  // The displayed sums index the grade-h block families by i >= 1; the
  // leading p x^n term carries no grade constraint of its own (its grade is
  // forced by multihomogeneity). The base cases of the underlying lemma
  // need that leading slot, with and without the z prefix.
  auto gen_slots = [&](const std::map<GradedVar, int, VarLess>& pool, bool with_z,
                       const Term& ztree) {
    // leading slot: p x^n over the whole pool, grade unconstrained
    {
      std::vector<GradedVar> all;
      for (const auto& [v, k] : pool)
        for (int c = 0; c < k; ++c) all.push_back(v);
      for (const auto& p : all_monomials(all)) {
        NonzeroSlot s;
        s.family = 'P';
        s.i = 0;
        s.coeff = 0;
        s.blocks = {p};
        Term t = assemble('P', 0, {p});
        if (with_z) {
          s.z = ztree;
          s.has_z = true;
          t = Term::mul(ztree, t);
        }
        s.monomial = t;
        push_cand(std::move(s));
      }
    }
    // P family: i = 1..n with i+1 grade-h blocks; H family: i' = 1..n with
    // i' grade-h blocks. Grade-consistency of the partitions realizes the
    // stated (n+i+1)g(x) = g(f) bookkeeping.
    for (char family : {'P', 'H'}) {
      for (int i = 1; i <= n; ++i) {
        int block_count = family == 'P' ? i + 1 : i;
        for (const auto& part : partitions(pool, block_count)) {
          std::vector<std::vector<Term>> block_monos;
          for (const auto& blk : part) block_monos.push_back(all_monomials(blk));
          std::vector<std::size_t> pick(block_monos.size(), 0);
          while (true) {
            std::vector<Term> blocks;
            for (std::size_t b = 0; b < pick.size(); ++b)
              blocks.push_back(block_monos[b][pick[b]]);
            NonzeroSlot s;
            s.family = family;
            s.i = i;
            s.coeff = 0;
            s.blocks = blocks;
            Term t = assemble(family, i, blocks);
            if (with_z) {
              s.z = ztree;
              s.has_z = true;
              t = Term::mul(ztree, t);
            }
            s.monomial = t;
            push_cand(std::move(s));
            std::size_t k = 0;
            while (k < pick.size() && pick[k] + 1 == block_monos[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
            ++pick[k];
          }
        }
      }
    }
  };

  if (case_a) {
    gen_slots(rest, false, Term());
  } else {
    MultisetIter it(rest);
    while (it.next()) {
      auto zvars = it.selected();
      GroupElem gz = multiset_grade(zvars, g.group_rank());
      if (generated_order({gz, h}) != 4) continue;
      auto rem = it.remaining();
      for (const auto& ztree : all_monomials(zvars)) {
        if (rem.empty()) {
          // bare z x^n
          NonzeroSlot s;
          s.family = 'Z';
          s.i = 0;
          s.coeff = 0;
          s.z = ztree;
          s.has_z = true;
          Term t = xl;
          for (int k = 1; k < n; ++k) t = Term::mul(t, xl);
          s.monomial = Term::mul(ztree, t);
          push_cand(std::move(s));
        } else {
          gen_slots(rem, true, ztree);
        }
      }
    }
  }

  if (cands.empty()) {
    out.flag = "no admissible slots for this multidegree";
    return out;
  }

  QVec coeffs(cands.size(), Rational(0));
  Poly rest_poly = f;
  {
    std::map<std::size_t, std::size_t> shape_index;
    for (std::size_t k = 0; k < cands.size(); ++k)
      shape_index.emplace(cands[k].slot.monomial.hash(), k);
    std::vector<std::pair<Rational, Term>> matched;
    for (const auto& [c, t] : f.monomials()) {
      auto it = shape_index.find(t.hash());
      if (it != shape_index.end() && cands[it->second].slot.monomial == t) {
        coeffs[it->second] += c;
        matched.emplace_back(c, t);
      }
    }
    rest_poly = f - Poly::from_terms(std::move(matched));
  }
  if (!rest_poly.is_zero()) {
    auto asg = generic_assignment(alg, g, vars);
    Vectorizer vec;
    std::vector<int> rows;
    rows.reserve(cands.size());
    for (const auto& c : cands)
      rows.push_back(vec.add(eval_poly(alg, Poly::monomial(1, c.slot.monomial), asg)));
    int frow = vec.add(eval_poly(alg, rest_poly, asg));
    std::vector<QVec> mat;
    mat.reserve(rows.size());
    for (int r : rows) mat.push_back(vec.dense(r));
    auto sol = solve_combination(mat, vec.dense(frow));
    if (!sol) {
      out.flag = "no evaluation-equal combination in the slot shape space";
      return out;
    }
    for (std::size_t k = 0; k < cands.size(); ++k) coeffs[k] += (*sol)[k];
  }
  std::vector<std::pair<Rational, Term>> re;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    NonzeroSlot s = cands[k].slot;
    s.coeff = c;
    re.emplace_back(c, s.monomial);
    out.slots.push_back(std::move(s));
  }
  out.reassembled = Poly::from_terms(std::move(re));
  out.ok = true;
  return out;
}

SplitResult split_two_components(const Term& u, const CayleyDickson& alg, const Grading& g) {
  auto leaves = term_leaves(u);
  check_var_ranks(leaves, g);
  std::set<unsigned> classes;
  for (const auto& v : leaves) {
    if (v.grade.is_zero())
      throw DomainError("split_two_components: zero-component leaf present");
    classes.insert(v.grade.bits());
  }
  if (classes.size() != 2)
    throw DomainError("split_two_components: term must depend on exactly two components");
  if (leaves.size() > 9) throw DomainError("split_two_components: degree too large");
  GroupElem h1(*classes.begin(), g.group_rank()), h2(*classes.rbegin(), g.group_rank());
  GroupElem hi = h1.order_key() > h2.order_key() ? h1 : h2;  // greater component left
  std::vector<GradedVar> lw, lv;
  for (const auto& v : leaves) (v.grade == hi ? lw : lv).push_back(v);

  auto vars = poly_vars(Poly::monomial(1, u));
  auto asg = generic_assignment(alg, g, vars);
  GElem target = eval_term(alg, u, asg);
  GElem neg_target = target;
  for (auto& c : neg_target.coords) c = -c;

  std::sort(lw.begin(), lw.end(), var_less);
  std::sort(lv.begin(), lv.end(), var_less);
  std::vector<GradedVar> pw = lw;
  do {
    std::vector<GradedVar> pv = lv;
    do {
      Term w = left_norm(pw), v = left_norm(pv);
      Term cand = Term::mul(w, v);
      GElem val = eval_term(alg, cand, asg);
      if (val == target) return {1, w, v};
      if (val == neg_target) return {-1, w, v};
    } while (std::next_permutation(pv.begin(), pv.end(), var_less));
  } while (std::next_permutation(pw.begin(), pw.end(), var_less));
  throw InternalError("split_two_components: no single-monomial split found");
}

}  // namespace octgi

#include "octgi/matrix.hpp"

#include <sstream>

#include "octgi/error.hpp"
#include "octgi/parse.hpp"
#include "octgi/rewrite.hpp"
#include "octgi/tideal.hpp"

namespace octgi {

QMat QMat::zero(int n) {
  QMat m;
  m.n = n;
  m.e.assign(n * n, Rational(0));
  return m;
}

QMat QMat::identity(int n) {
  QMat m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::unit(int n, int i, int j) {
  QMat m = zero(n);
  m.at(i, j) = 1;
  return m;
}

bool QMat::is_zero() const {
  for (const auto& c : e)
    if (c != 0) return false;
  return true;
}

std::string QMat::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < n; ++j) {
      if (j) s += ",";
      s += rat_str(at(i, j));
    }
  }
  s += "]";
  return s;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.n != b.n) throw DimensionError("matrix size mismatch");
  QMat m = QMat::zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.n; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

QMat mat_add(const QMat& a, const QMat& b) {
  QMat m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

QMat mat_sub(const QMat& a, const QMat& b) {
  QMat m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] -= b.e[i];
  return m;
}

QMat mat_scale(const QMat& a, const Rational& c) {
  QMat m = a;
  for (auto& x : m.e) x *= c;
  return m;
}

std::vector<QMat> GradedMatrixAlgebra::component_basis(int alpha) const {
  std::vector<QMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (component_of(i, j) == alpha) out.push_back(QMat::unit(n, i, j));
  return out;
}

bool GradedMatrixAlgebra::check_grading_closure() const {
  long total = 0;
  for (int a = 0; a < n; ++a) total += static_cast<long>(component_basis(a).size());
  if (total != static_cast<long>(n) * n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          QMat p = mat_mul(QMat::unit(n, i, j), QMat::unit(n, k, l));
          if (p.is_zero()) continue;
          int expect = (component_of(i, j) + component_of(k, l)) % n;
          // p is a single matrix unit; check its component
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
              if (p.at(r, c) != 0 && component_of(r, c) != expect) return false;
        }
  return true;
}

QMat eval_poly_m2(const Poly& f, const std::map<GradedVar, QMat, VarLess>& asg) {
  std::function<QMat(const Term&)> ev = [&](const Term& t) -> QMat {
    if (t.is_leaf()) {
      auto it = asg.find(t.var());
      if (it == asg.end()) throw DomainError("unassigned variable " + t.var().str());
      return it->second;
    }
    return mat_mul(ev(t.left()), ev(t.right()));
  };
  QMat acc = QMat::zero(2);
  for (const auto& [c, t] : f.monomials()) acc = mat_add(acc, mat_scale(ev(t), c));
  return acc;
}

namespace {

GroupElem z2(unsigned b) { return GroupElem(b, 1); }

// all assignments of the listed variables to their component bases
bool sweep_m2(const Poly& f) {
  GradedMatrixAlgebra m2(2);
  auto vars = poly_vars(f);
  std::vector<std::vector<QMat>> choices;
  for (const auto& v : vars) choices.push_back(m2.component_basis(v.grade.bits()));
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    std::map<GradedVar, QMat, VarLess> asg;
    for (std::size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = choices[i][idx[i]];
    if (!eval_poly_m2(f, asg).is_zero()) return false;
    std::size_t k = 0;
    while (k < idx.size() && idx[k] + 1 == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
    ++idx[k];
  }
  return true;
}

Term L(int id, unsigned g) { return Term::leaf(GradedVar{id, z2(g)}); }

}  // namespace

M2Report check_m2_identities() {
  M2Report rep;
  // (17): xy - yx, both grades 0
  {
    Poly f = Poly::monomial(1, Term::mul(L(1, 0), L(2, 0))) +
             Poly::monomial(-1, Term::mul(L(2, 0), L(1, 0)));
    rep.eq17 = sweep_m2(f);
  }
  // (18): x1 x x2 - x2 x x1 with g(x1)=g(x2)=g(x)=1, both bracketings
  {
    Term x1 = L(1, 1), x = L(3, 1), x2 = L(2, 1);
    Poly left = Poly::monomial(1, Term::mul(Term::mul(x1, x), x2)) +
                Poly::monomial(-1, Term::mul(Term::mul(x2, x), x1));
    Poly right = Poly::monomial(1, Term::mul(x1, Term::mul(x, x2))) +
                 Poly::monomial(-1, Term::mul(x2, Term::mul(x, x1)));
    rep.eq18 = sweep_m2(left) && sweep_m2(right);
  }
  // associativity (13*) over all grade combinations
  {
    rep.associativity = true;
    for (unsigned a = 0; a < 2; ++a)
      for (unsigned b = 0; b < 2; ++b)
        for (unsigned c = 0; c < 2; ++c) {
          Poly f = Poly::monomial(1, Term::mul(Term::mul(L(1, a), L(2, b)), L(3, c))) +
                   Poly::monomial(-1, Term::mul(L(1, a), Term::mul(L(2, b), L(3, c))));
          if (!sweep_m2(f)) rep.associativity = false;
        }
  }
  return rep;
}

IsoTable split_quaternion_iso() {
  AlgebraParams p;
  p.rank = 2;
  p.alphas = {Rational(1), Rational(1)};
  CayleyDickson quat(p);

  QMat I = QMat::identity(2);
  QMat D = mat_sub(QMat::unit(2, 0, 0), QMat::unit(2, 1, 1));   // E11 - E22
  QMat A1 = mat_add(QMat::unit(2, 0, 1), QMat::unit(2, 1, 0));  // E12 + E21
  QMat A2 = mat_sub(QMat::unit(2, 0, 1), QMat::unit(2, 1, 0));  // E12 - E21
  struct Target {
    QMat m;
    std::string label;
  };
  Target tI{I, "I"}, tD{D, "E11-E22"}, tA1{A1, "E12+E21"}, tA2{A2, "E12-E21"};

  // e00 -> I pinned; e10 -> +-D; {e01, e11} -> +-{A1, A2} bijectively
  for (int su = 0; su < 2; ++su)
    for (int perm = 0; perm < 2; ++perm)
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2) {
          std::vector<Target> img(4);
          std::vector<int> sign{1, su ? -1 : 1, s1 ? -1 : 1, s2 ? -1 : 1};
          img[0] = tI;
          img[1] = tD;
          img[2] = perm ? tA2 : tA1;
          img[3] = perm ? tA1 : tA2;
          auto image_of = [&](int b) { return mat_scale(img[b].m, Rational(sign[b])); };
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
              const auto& entry = quat.table(i, j);
              QMat lhs = mat_mul(image_of(i), image_of(j));
              QMat rhs = mat_scale(image_of(entry.basis), entry.coeff);
              if (!(lhs == rhs)) ok = false;
            }
          if (!ok) continue;
          IsoTable table;
          for (int b = 0; b < 4; ++b) {
            table.image.push_back(image_of(b));
            std::string lbl = img[b].label;
            if (sign[b] < 0)
              lbl = lbl.find_first_of("+-") != std::string::npos ? "-(" + lbl + ")" : "-" + lbl;
            table.label.push_back(lbl);
          }
          // grade compatibility: e00, e10 diagonal; e01, e11 antidiagonal
          auto diag = [](const QMat& m) { return m.at(0, 1) == 0 && m.at(1, 0) == 0; };
          auto anti = [](const QMat& m) { return m.at(0, 0) == 0 && m.at(1, 1) == 0; };
          table.grade_compatible = diag(table.image[0]) && diag(table.image[1]) &&
                                   anti(table.image[2]) && anti(table.image[3]);
          return table;
        }
  throw InternalError("no signed-permutation isomorphism onto M_2 found");
}

std::vector<RestrictedRule> z2_restricted_rules() {
  std::vector<RestrictedRule> out;
  // one row per equation: the first admissible rank-1 instance
  for (const auto& entry : identity_catalog()) {
    if (entry.group_rank != 2) continue;
    int num = entry.number;
    if (num != 5 && num != 6 && num != 7 && num != 9 && num != 13 && num != 14) continue;
    if (entry.label == "15a" || entry.label == "15b") continue;
    auto elems = all_elements(1);
    std::vector<int> idx(entry.rule.arity, 0);
    bool emitted = false;
    while (!emitted) {
      std::vector<GroupElem> grades;
      for (int i : idx) grades.push_back(elems[i]);
      if (entry.rule.cond(grades)) {
        bool gen = num == 5 || num == 13 || num == 14;
        out.push_back({num, std::to_string(num) + "*", entry.rule.identity_poly(grades), gen});
        emitted = true;
      }
      int k = entry.rule.arity - 1;
      while (k >= 0 && idx[k] + 1 == static_cast<int>(elems.size())) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
  }
  return out;
}

long z2_instance_count(int eq_number) {
  for (const auto& entry : identity_catalog()) {
    if (entry.group_rank != 2 || entry.number != eq_number) continue;
    if (entry.label == "15a" || entry.label == "15b") continue;
    long count = 0;
    auto elems = all_elements(1);
    std::vector<int> idx(entry.rule.arity, 0);
    while (true) {
      std::vector<GroupElem> grades;
      for (int i : idx) grades.push_back(elems[i]);
      if (entry.rule.cond(grades)) ++count;
      int k = entry.rule.arity - 1;
      while (k >= 0 && idx[k] + 1 == static_cast<int>(elems.size())) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
    return count;
  }
  throw DomainError("unknown catalog equation " + std::to_string(eq_number));
}

RederiveReport rederive_restricted() {
  RederiveReport rep;
  std::vector<Rule> gens;
  for (const auto& entry : identity_catalog()) {
    if (entry.group_rank != 2) continue;
    if (entry.number == 5 || entry.number == 13 || entry.number == 14)
      if (entry.label != "15a" && entry.label != "15b") gens.push_back(entry.rule);
  }
  auto targets = z2_restricted_rules();
  for (const auto& t : targets) {
    if (t.generator) continue;
    bool member = membership(t.poly, gens);
    if (t.number == 6) rep.m6 = member;
    if (t.number == 7) rep.m7 = member;
    if (t.number == 9) rep.m9 = member;
  }
  return rep;
}

std::string derive_m2_text() {
  std::ostringstream out;
  out << "restricted rules (Z2)\n";
  out << "rule\trole\tidentity\n";
  for (const auto& r : z2_restricted_rules())
    out << r.name << "\t" << (r.generator ? "generator" : "derived") << "\t"
        << format_poly(r.poly) << "\n";
  out << "\nequations with no Z2 instance\n";
  out << "eq\tinstances\n";
  for (int num : {8, 10, 11, 12}) out << num << "\t" << z2_instance_count(num) << "\n";
  RederiveReport rep = rederive_restricted();
  out << "\nmembership in <(5*),(13*),(14*)>\n";
  out << "target\tmember\n";
  out << "6*\t" << (rep.m6 ? 1 : 0) << "\n";
  out << "7*\t" << (rep.m7 ? 1 : 0) << "\n";
  out << "9*\t" << (rep.m9 ? 1 : 0) << "\n";
  M2Report m2 = check_m2_identities();
  out << "\nZ2-graded M_2 identities\n";
  out << "identity\tholds\n";
  out << "(17)\t" << (m2.eq17 ? 1 : 0) << "\n";
  out << "(18)\t" << (m2.eq18 ? 1 : 0) << "\n";
  out << "associativity\t" << (m2.associativity ? 1 : 0) << "\n";
  IsoTable iso = split_quaternion_iso();
  out << "\nsplit quaternion -> M_2 isomorphism\n";
  out << "basis\timage\tmatrix\n";
  const char* labels[4] = {"e00", "e10", "e01", "e11"};
  for (int b = 0; b < 4; ++b)
    out << labels[b] << "\t" << iso.label[b] << "\t" << iso.image[b].str() << "\n";
  out << "grade_compatible\t" << (iso.grade_compatible ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace octgi

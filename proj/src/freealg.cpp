#include "octgi/freealg.hpp"

#include <algorithm>

namespace octgi {

struct Term::Node {
  bool leaf;
  GradedVar var;
  NodePtr l, r;
  int degree;
  GroupElem grade;
  std::size_t hash;
};

Term Term::leaf(const GradedVar& v) {
  auto n = std::make_shared<Node>();
  n->leaf = true;
  n->var = v;
  n->degree = 1;
  n->grade = v.grade;
  n->hash = std::hash<int>()(v.id * 8 + static_cast<int>(v.grade.bits())) ^ 0x9e3779b9u;
  return Term(std::move(n));
}

Term Term::mul(const Term& l, const Term& r) {
  if (!l.valid() || !r.valid()) throw DomainError("multiplying invalid term");
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->l = l.node_;
  n->r = r.node_;
  n->degree = l.degree() + r.degree();
  n->grade = l.g_degree() + r.g_degree();
  n->hash = l.hash() * 1000003u + r.hash() * 97u + 0x85ebca6bu;
  return Term(std::move(n));
}

bool Term::is_leaf() const { return node_->leaf; }
const GradedVar& Term::var() const {
  if (!node_->leaf) throw DomainError("var() on a non-leaf term");
  return node_->var;
}
Term Term::left() const { return Term(node_->l); }
Term Term::right() const { return Term(node_->r); }
int Term::degree() const { return node_->degree; }
GroupElem Term::g_degree() const { return node_->grade; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->leaf != o.node_->leaf ||
      node_->degree != o.node_->degree)
    return false;
  if (node_->leaf) return node_->var == o.node_->var;
  return left() == o.left() && right() == o.right();
}

std::string Term::str() const {
  if (node_->leaf) return node_->var.str();
  return "(" + left().str() + " * " + right().str() + ")";
}

int term_compare(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  unsigned ka = a.g_degree().order_key(), kb = b.g_degree().order_key();
  if (ka != kb) return ka > kb ? -1 : 1;  // greater grade first
  if (a.is_leaf()) {
    // both leaves; greater variable first
    if (a.var() == b.var()) return 0;
    return var_less(b.var(), a.var()) ? -1 : 1;
  }
  int c = term_compare(a.left(), b.left());
  if (c != 0) return c;
  return term_compare(a.right(), b.right());
}

Poly Poly::monomial(const Rational& c, const Term& t) {
  return from_terms({{c, t}});
}

Poly Poly::from_terms(std::vector<std::pair<Rational, Term>> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return term_less(a.second, b.second); });
  Poly p;
  for (auto& [c, t] : terms) {
    if (c == 0) continue;
    if (!p.ms_.empty() && p.ms_.back().second == t) {
      p.ms_.back().first += c;
      if (p.ms_.back().first == 0) p.ms_.pop_back();
    } else {
      p.ms_.emplace_back(std::move(c), t);
    }
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<std::pair<Rational, Term>> all = ms_;
  all.insert(all.end(), o.ms_.begin(), o.ms_.end());
  return from_terms(std::move(all));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [c, t] : p.ms_) c = -c;
  return p;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& [k, t] : p.ms_) k *= c;
  return p;
}

Poly Poly::mul(const Poly& o) const {
  std::vector<std::pair<Rational, Term>> out;
  for (const auto& [ca, ta] : ms_)
    for (const auto& [cb, tb] : o.ms_) out.emplace_back(ca * cb, Term::mul(ta, tb));
  return from_terms(std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (ms_.size() != o.ms_.size()) return false;
  for (std::size_t i = 0; i < ms_.size(); ++i)
    if (ms_[i].first != o.ms_[i].first || !(ms_[i].second == o.ms_[i].second)) return false;
  return true;
}

namespace {

void collect_leaves(const Term& t, std::vector<GradedVar>& out) {
  if (t.is_leaf()) {
    out.push_back(t.var());
    return;
  }
  collect_leaves(t.left(), out);
  collect_leaves(t.right(), out);
}

}  // namespace

std::vector<GradedVar> term_leaves(const Term& t) {
  std::vector<GradedVar> out;
  collect_leaves(t, out);
  return out;
}

Degrees degrees(const Term& t) {
  Degrees d;
  for (const auto& v : term_leaves(t)) {
    ++d.total;
    ++d.per_var[v];
    ++d.per_component[v.grade.order_key()];
  }
  return d;
}

namespace {

std::string multidegree_key(const Term& t) {
  Degrees d = degrees(t);
  std::string key;
  for (const auto& [v, n] : d.per_var)
    key += v.str() + "^" + std::to_string(n) + ";";
  return key;
}

}  // namespace

std::vector<Poly> multihomogeneous_parts(const Poly& f) {
  std::map<std::string, std::vector<std::pair<Rational, Term>>> buckets;
  for (const auto& [c, t] : f.monomials()) buckets[multidegree_key(t)].emplace_back(c, t);
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& [k, v] : buckets) out.push_back(Poly::from_terms(std::move(v)));
  return out;
}

bool is_multihomogeneous(const Poly& f) { return multihomogeneous_parts(f).size() <= 1; }

bool is_multilinear(const Poly& f) {
  if (f.is_zero()) return true;
  if (!is_multihomogeneous(f)) return false;
  Degrees d = degrees(f.monomials().front().second);
  for (const auto& [v, n] : d.per_var)
    if (n != 1) return false;
  return true;
}

std::vector<GradedVar> poly_vars(const Poly& f) {
  std::map<GradedVar, int, VarLess> seen;
  for (const auto& [c, t] : f.monomials())
    for (const auto& v : term_leaves(t)) seen[v] = 1;
  std::vector<GradedVar> out;
  for (const auto& [v, _] : seen) out.push_back(v);
  return out;
}

Term left_norm(const std::vector<GradedVar>& vars) {
  if (vars.empty()) throw DomainError("left_norm of an empty variable list");
  Term t = Term::leaf(vars[0]);
  for (std::size_t i = 1; i < vars.size(); ++i) t = Term::mul(t, Term::leaf(vars[i]));
  return t;
}

bool is_r1_word(const Term& t) {
  Term cur = t;
  while (!cur.is_leaf()) {
    if (!cur.right().is_leaf()) return false;
    cur = cur.left();
  }
  return true;
}

bool is_regular_r1(const Term& t, const VariableOrder& less) {
  if (!is_r1_word(t)) return false;
  auto leaves = term_leaves(t);
  for (std::size_t i = 1; i < leaves.size(); ++i)
    if (less(leaves[i], leaves[i - 1])) return false;  // strictly decreasing step
  return true;
}

bool is_regular_r1(const Term& t) {
  return is_regular_r1(t, [](const GradedVar& a, const GradedVar& b) { return var_less(a, b); });
}

bool is_regular_r2(const Term& t, const VariableOrder& less) {
  // left spine: t = (...((s1 s2) s3)...) sm with s1 the deepest-left leaf
  Term cur = t;
  std::vector<Term> spine;
  while (!cur.is_leaf()) {
    spine.push_back(cur.right());
    cur = cur.left();
  }
  // cur == s1, a leaf: trivially a regular r1-word on its own
  for (auto it = spine.rbegin(); it != spine.rend(); ++it)
    if (!it->is_leaf() && !is_regular_r1(*it, less)) return false;
  return true;
}

bool is_regular_r2(const Term& t) {
  return is_regular_r2(t, [](const GradedVar& a, const GradedVar& b) { return var_less(a, b); });
}

std::pair<int, Term> star_term(const Term& t) {
  if (t.is_leaf()) {
    if (t.var().grade.is_zero())
      throw DomainError("star applied to a zero-component variable");
    return {-1, t};
  }
  auto [sl, l] = star_term(t.left());
  auto [sr, r] = star_term(t.right());
  return {sl * sr, Term::mul(r, l)};
}

Poly star(const Poly& f) {
  std::vector<std::pair<Rational, Term>> out;
  for (const auto& [c, t] : f.monomials()) {
    auto [s, rt] = star_term(t);
    out.emplace_back(c * s, rt);
  }
  return Poly::from_terms(std::move(out));
}

std::vector<Term> all_bracketings(const std::vector<GradedVar>& leaves) {
  if (leaves.empty()) return {};
  // trees over leaves[lo..hi)
  std::function<std::vector<Term>(std::size_t, std::size_t)> rec =
      [&](std::size_t lo, std::size_t hi) -> std::vector<Term> {
    std::vector<Term> out;
    if (hi - lo == 1) {
      out.push_back(Term::leaf(leaves[lo]));
      return out;
    }
    for (std::size_t mid = lo + 1; mid < hi; ++mid)
      for (const auto& l : rec(lo, mid))
        for (const auto& r : rec(mid, hi)) out.push_back(Term::mul(l, r));
    return out;
  };
  return rec(0, leaves.size());
}

std::vector<Term> all_monomials(const std::vector<GradedVar>& leaves) {
  std::vector<GradedVar> sorted = leaves;
  std::sort(sorted.begin(), sorted.end(), var_less);
  std::vector<Term> out;
  do {
    for (const auto& t : all_bracketings(sorted)) out.push_back(t);
  } while (std::next_permutation(sorted.begin(), sorted.end(), var_less));
  std::sort(out.begin(), out.end(), term_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Term& a, const Term& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace octgi

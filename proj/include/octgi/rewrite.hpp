#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octgi/algebra.hpp"
#include "octgi/eval.hpp"
#include "octgi/freealg.hpp"

namespace octgi {

/// Sign schemes of the Z2^3 normal form: xy = mu(g(x),g(y)) yx and
/// (xy)z = nu(g(x),g(y),g(z)) x(yz) hold identically in the octonions.
struct SchemeFns {
  static int mu(const GroupElem& a, const GroupElem& b) {
    return generated_order({a, b}) <= 2 ? 1 : -1;
  }
  static int nu(const GroupElem& a, const GroupElem& b, const GroupElem& c) {
    return generated_order({a, b, c}) <= 4 ? 1 : -1;
  }
};

/// Conditional identity schema. Pattern leaves are slots x0..x{arity-1};
/// the schema asserts lhs = rhs for every grade assignment satisfying the
/// condition. Every registered rule is machine-verified by exhaustive
/// homogeneous basis evaluation before use.
struct Rule {
  std::string name;  // e.g. "eq5-cocomuta"
  int number = 0;    // catalog equation number (0 for engine orientations)
  int arity = 0;
  Term lhs;
  std::vector<std::pair<Rational, Term>> rhs;
  std::function<bool(const std::vector<GroupElem>&)> cond;
  bool derived = false;

  /// lhs - rhs with fresh variables x0..x{arity-1} of the given grades.
  Poly identity_poly(const std::vector<GroupElem>& grades) const;

  /// lhs - rhs with the given monomials bound to the slots.
  Poly poly_instance(const std::vector<Term>& bind) const;

  bool rhs_is_monomial() const { return rhs.size() == 1; }
};

/// Instantiates a pattern term, replacing slot i by bind[i].
Term instantiate(const Term& pattern, const std::vector<Term>& bind);

/// Pattern slot leaf (the grade on the leaf is a placeholder).
Term slot(int i);

/// Verifies that every condition-satisfying grade assignment of the rule is
/// a graded identity of the algebra; throws InternalError otherwise.
/// Components of the octonion gradings have dimension <= 2 and the schemas
/// are multilinear in their slots, so basis evaluation is complete evidence.
void verify_rule(const Rule& r, const CayleyDickson& alg, const Grading& g);

/// The Z2^3 basis: equations (1)-(4), verified against `alg` (fine grading).
std::vector<Rule> ruleset_z2_3(const CayleyDickson& alg);

/// Generators of the ideal I: equations (5)-(14), verified against `alg`
/// under the coarse Z2^2 grading.
std::vector<Rule> ruleset_I(const CayleyDickson& alg);

/// Derived identities: the two linearizations of alternativity (15) and
/// equation (16); registered like base rules but flagged derived.
std::vector<Rule> derived_rules(const CayleyDickson& alg);

/// Full display catalog (1)-(16) without verification, for reporting.
/// Entries 15a/15b carry repeated slots and are checked generically.
struct CatalogEntry {
  int number;
  std::string label;  // "1".."16", "15a", "15b"
  Rule rule;
  int group_rank;  // 3 for (1)-(4), 2 for (5)-(16)
};
std::vector<CatalogEntry> identity_catalog();

struct RewriteStep {
  std::string rule;
  std::string pos;  // path from the root, "." for the root, ".0.1" style
};

struct NormalizeResult {
  Rational coeff;  // +1 or -1
  Term word;       // regular r1-word
  std::vector<RewriteStep> trace;
};

/// Constructive Z2^3 normal form: rewrites a term to +-1 times a regular
/// r1-word using only instances of (1)-(4); the recursion of the underlying
/// lemma is the algorithm. Total on Z2^3-graded terms.
NormalizeResult normalize_z2_3(const Term& t);

struct RewriteResult {
  Poly out;
  bool normal = true;  // false when the step budget ran out
  long steps = 0;
  std::vector<RewriteStep> trace;
};

/// Oriented normalization system for the Z2^2 grading: single-monomial
/// orientations of (5)-(10), (13), (14), applied leftmost-innermost, each
/// application gated by a strict decrease in the canonical term order (which
/// also forces termination).
class RewriteEngine {
public:
  explicit RewriteEngine(const CayleyDickson& alg);
  RewriteResult rewrite(const Poly& f, long budget = 10000) const;
  const std::vector<Rule>& rules() const { return rules_; }

private:
  bool step_monomial(Term& t, Rational& coeff, RewriteStep& step) const;
  std::vector<Rule> rules_;
};

RewriteResult rewrite_modulo_I(const Poly& f, const CayleyDickson& alg, long budget = 10000);

/// Structured form of a multihomogeneous f around its greatest variable x
/// with g(x) = 0: either f ~ sum_i x^i y_i x^{n-i} (g(f) != 0) or
/// f ~ sum_{i,j} (y_ij x^i)(z_ij x^{n-i}) (g(f) = 0), the equivalence being
/// exact evaluation equality (certified by a generic-evaluation solve).
struct PairSlot {
  int i;  // x-count attached to the y side
  Rational coeff;
  Term y;
  Term z;
};

struct ZeroTopForm {
  bool ok = false;
  std::string flag;  // reason when !ok; feeds the open-questions log
  bool grade_zero_case = false;
  int n = 0;
  std::vector<Poly> y;          // index i = number of x's multiplied on the left
  std::vector<PairSlot> pairs;  // grade-zero case
  Poly reassembled;
};

ZeroTopForm zero_top_form(const Poly& f, const GradedVar& x, const CayleyDickson& alg,
                          const Grading& g);

/// Structured form around the greatest variable x with g(x) = h != 0, per
/// the two cases g(f) in <h> and <g(f),h> = Z2^2. Slot families:
///   P(i): <p_{i+1}, x, p_i, x, ..., p_1> x^{n-i}, every p of grade h;
///   H(i'): <x, h_{i'}, x, ..., x, h_1> x^{n-i'}, every h_l of grade h;
/// and in the second case each slot is premultiplied by a monomial z with
/// <g(z), h> = Z2^2 (plus the bare z x^n slot), parities as stated.
struct NonzeroSlot {
  char family;  // 'P', 'H', or 'Z' (bare z x^n)
  int i;
  Rational coeff;
  std::vector<Term> blocks;  // p's or h's, outermost first
  Term z;                    // valid for the premultiplied case
  bool has_z = false;
  Term monomial;  // the assembled shape
};

struct NonzeroTopForm {
  bool ok = false;
  std::string flag;
  bool split_case = false;  // true when <g(f), g(x)> = Z2^2
  int n = 0;
  std::vector<NonzeroSlot> slots;
  Poly reassembled;
};

NonzeroTopForm nonzero_top_form(const Poly& f, const GradedVar& x, const CayleyDickson& alg,
                                const Grading& g);

/// For a monomial on exactly two (nonzero) grade classes: sign and single-
/// component words w, v with eval(u) = sign * eval(w v) everywhere; w is on
/// the greater component. Found by ordering search, certified by exact
/// generic evaluation.
struct SplitResult {
  int sign;
  Term w;
  Term v;
};
SplitResult split_two_components(const Term& u, const CayleyDickson& alg, const Grading& g);

}  // namespace octgi

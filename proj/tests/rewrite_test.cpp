#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "octgi/checker.hpp"
#include "octgi/parse.hpp"
#include "octgi/rewrite.hpp"
#include "test_util.hpp"

using namespace octgi;

namespace {

CayleyDickson& split_octonions() {
  static CayleyDickson alg(AlgebraParams::split_default(3));
  return alg;
}

GroupElem g2(unsigned b) { return GroupElem(b, 2); }
GroupElem g3(unsigned b) { return GroupElem(b, 3); }
Term L(int id, const GroupElem& g) { return Term::leaf(GradedVar{id, g}); }

}  // namespace

TEST_CASE("scheme signs read off the subgroup orders") {
  CHECK(SchemeFns::mu(g3(0b001), g3(0b001)) == 1);
  CHECK(SchemeFns::mu(g3(0), g3(0b011)) == 1);
  CHECK(SchemeFns::mu(g3(0b001), g3(0b010)) == -1);
  CHECK(SchemeFns::nu(g3(0b001), g3(0b001), g3(0b010)) == 1);
  CHECK(SchemeFns::nu(g3(0b001), g3(0b010), g3(0b100)) == -1);
  CHECK(SchemeFns::nu(g3(0b001), g3(0b010), g3(0b011)) == 1);
}

TEST_CASE("rule sets register against the split octonions") {
  CHECK(ruleset_z2_3(split_octonions()).size() == 4);
  CHECK(ruleset_I(split_octonions()).size() == 10);
  CHECK(derived_rules(split_octonions()).size() == 3);
  RewriteEngine engine(split_octonions());
  CHECK(engine.rules().size() == 8);
}

TEST_CASE("registration rejects a wrong rule") {
  // commutativity across Z2^2-generating grades is not an identity
  Rule bogus;
  bogus.name = "bogus-commute";
  bogus.arity = 2;
  bogus.lhs = Term::mul(slot(0), slot(1));
  bogus.rhs = {{Rational(1), Term::mul(slot(1), slot(0))}};
  bogus.cond = [](const std::vector<GroupElem>& g) {
    return generated_order({g[0], g[1]}) == 4;
  };
  CHECK_THROWS_AS(verify_rule(bogus, split_octonions(), Grading::coarse(3)), InternalError);
}

TEST_CASE("z2_3 scheme instances from the catalog hold") {
  auto rules = ruleset_z2_3(split_octonions());
  Grading fine = Grading::fine(3);
  // same-component commutator
  CHECK(is_identity_multilinear(rules[0].identity_poly({g3(0b001), g3(0b001)}),
                                split_octonions(), fine)
            .identity);
  // anticommutator across independent classes
  CHECK(is_identity_multilinear(rules[1].identity_poly({g3(0b001), g3(0b010)}),
                                split_octonions(), fine)
            .identity);
  // associator on an order-4 subgroup
  CHECK(is_identity_multilinear(
            rules[2].identity_poly({g3(0b001), g3(0b001), g3(0b010)}), split_octonions(), fine)
            .identity);
}

TEST_CASE("normalize_z2_3 worked examples") {
  GradedVar x1{1, g3(0b001)}, x2{2, g3(0b001)};
  auto r1 = normalize_z2_3(Term::mul(Term::leaf(x2), Term::leaf(x1)));
  CHECK(r1.coeff == 1);
  CHECK(r1.word == Term::mul(Term::leaf(x1), Term::leaf(x2)));

  GradedVar y1{1, g3(0b001)}, y2{2, g3(0b010)};
  auto r2 = normalize_z2_3(Term::mul(Term::leaf(y2), Term::leaf(y1)));
  CHECK(r2.coeff == -1);
  CHECK(r2.word == Term::mul(Term::leaf(y1), Term::leaf(y2)));

  GradedVar z1{1, g3(0b001)}, z2{2, g3(0b010)}, z3{3, g3(0b100)};
  auto r3 = normalize_z2_3(
      Term::mul(Term::leaf(z1), Term::mul(Term::leaf(z2), Term::leaf(z3))));
  CHECK(r3.coeff == -1);
  CHECK(r3.word == Term::mul(Term::mul(Term::leaf(z1), Term::leaf(z2)), Term::leaf(z3)));
  REQUIRE(r3.trace.size() == 1);
  CHECK(r3.trace[0].rule == "eq4-anti-associativa");
  CHECK(r3.trace[0].pos == ".");
}

TEST_CASE("normalize_z2_3 is total, signed and evaluation-preserving") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> deg(1, 7);
  for (int i = 0; i < 200; ++i) {
    Term t = testutil::random_term(rng, deg(rng), 3, 4);
    auto res = normalize_z2_3(t);
    CHECK((res.coeff == 1 || res.coeff == -1));
    CHECK(is_regular_r1(res.word));
    Assignment<Rational> asg;
    for (const auto& v : poly_vars(Poly::monomial(1, t)))
      asg[v] = split_octonions().basis_elem(static_cast<int>(v.grade.bits()));
    CHECK(eval_term(split_octonions(), t, asg) ==
          elem_scale(eval_term(split_octonions(), res.word, asg), res.coeff));
  }
}

TEST_CASE("normalize also covers the quaternion fine grading") {
  AlgebraParams p;
  p.rank = 2;
  p.alphas = {rat(1), rat(1)};
  CayleyDickson quat(p);
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int i = 0; i < 50; ++i) {
    Term t = testutil::random_term(rng, deg(rng), 2, 3);
    auto res = normalize_z2_3(t);
    CHECK(is_regular_r1(res.word));
    Assignment<Rational> asg;
    for (const auto& v : poly_vars(Poly::monomial(1, t)))
      asg[v] = quat.basis_elem(static_cast<int>(v.grade.bits()));
    CHECK(eval_term(quat, t, asg) ==
          elem_scale(eval_term(quat, res.word, asg), res.coeff));
  }
}

TEST_CASE("rewrite engine worked examples") {
  CayleyDickson& alg = split_octonions();
  SUBCASE("zero-grade variable moves out by the (10) route") {
    Poly f = parse_poly("(x3:(1,0) * (x2:(0,1) * x1:(0,0)))");
    auto res = rewrite_modulo_I(f, alg);
    CHECK(res.normal);
    CHECK(res.out == parse_poly("(x1:(0,0) * (x3:(1,0) * x2:(0,1)))"));
    REQUIRE(res.trace.size() == 1);
    CHECK(res.trace[0].rule == "eq10-entesq0");
  }
  SUBCASE("zero-grade pair sorts and unnests via (14), (13)") {
    Poly f = parse_poly("((x1:(0,0) * x2:(0,0)) * x3:(1,0))");
    auto res = rewrite_modulo_I(f, alg);
    CHECK(res.out == parse_poly("(x2:(0,0) * (x1:(0,0) * x3:(1,0)))"));
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0].rule == "eq14-com");
    CHECK(res.trace[1].rule == "eq13-ass");
  }
  SUBCASE("already-normal y*x stays put") {
    Poly f = parse_poly("(x1:(1,0) * x2:(0,0))");
    auto res = rewrite_modulo_I(f, alg);
    CHECK(res.steps == 0);
    CHECK(res.out == f);
  }
}

TEST_CASE("rewrite engine preserves evaluation and terminates") {
  CayleyDickson& alg = split_octonions();
  Grading coarse = Grading::coarse(3);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int i = 0; i < 60; ++i) {
    Term t = testutil::random_term(rng, deg(rng), 2, 3);
    Poly f = Poly::monomial(rat(2, 3), t);
    auto res = rewrite_modulo_I(f, alg);
    CHECK(res.normal);
    auto vars = poly_vars(f);
    auto asg = generic_assignment(alg, coarse, vars);
    CHECK(eval_poly(alg, f, asg) == eval_poly(alg, res.out, asg));
    // fixpoint: a second pass does nothing
    CHECK(rewrite_modulo_I(res.out, alg).steps == 0);
  }
}

TEST_CASE("rewrite engine budget exhaustion is flagged") {
  CayleyDickson& alg = split_octonions();
  Poly f = parse_poly("((x1:(0,0) * x2:(0,0)) * (x3:(0,0) * x4:(0,0)))");
  auto res = rewrite_modulo_I(f, alg, 1);
  CHECK_FALSE(res.normal);
  CHECK(res.steps == 1);
}

TEST_CASE("zero_top_form worked examples") {
  CayleyDickson& alg = split_octonions();
  Grading coarse = Grading::coarse(3);
  GradedVar x{9, g2(0)};
  SUBCASE("f = y x with nonzero y puts y at the left-count-0 slot") {
    Poly f = parse_poly("(x1:(1,0) * x9:(0,0))");
    auto r = zero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    CHECK_FALSE(r.grade_zero_case);
    CHECK(r.n == 1);
    CHECK(r.y[0] == parse_poly("x1:(1,0)"));
    CHECK(r.y[1].is_zero());
    CHECK(r.reassembled == f);
  }
  SUBCASE("f = (y x) z with matching nonzero grades gives a single pair") {
    Poly f = parse_poly("((x1:(1,0) * x9:(0,0)) * x2:(1,0))");
    auto r = zero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    CHECK(r.grade_zero_case);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].i == 1);
    CHECK(r.pairs[0].coeff == 1);
    CHECK(r.pairs[0].y == parse_poly("x1:(1,0)").monomials()[0].second);
    CHECK(r.pairs[0].z == parse_poly("x2:(1,0)").monomials()[0].second);
  }
  SUBCASE("f = x y fills the left-count-1 slot") {
    Poly f = parse_poly("(x9:(0,0) * x1:(1,0))");
    auto r = zero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    CHECK(r.y[1] == parse_poly("x1:(1,0)"));
  }
  SUBCASE("an all-zero-grade pair case is flagged, not silent") {
    Poly f = parse_poly("((x1:(0,0) * x2:(0,0)) * x9:(0,0))");
    auto r = zero_top_form(f, x, alg, coarse);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.flag.empty());
  }
  SUBCASE("reassembly is evaluation-equal for a mixed input") {
    Poly f = parse_poly("(x9:(0,0) * (x1:(1,0) * x2:(0,1))) + 2 ((x1:(1,0) * x2:(0,1)) * x9:(0,0))");
    auto r = zero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    auto asg = generic_assignment(alg, coarse, poly_vars(f));
    CHECK(eval_poly(alg, f, asg) == eval_poly(alg, r.reassembled, asg));
  }
  SUBCASE("preconditions are enforced") {
    CHECK_THROWS_AS(zero_top_form(Poly::zero(), x, alg, coarse), DomainError);
    // x must be the greatest variable
    Poly f = parse_poly("(x1:(1,0) * x2:(0,0))");
    CHECK_THROWS_AS(zero_top_form(f, GradedVar{1, g2(0b01)}, alg, coarse), DomainError);
    // x must have grade zero
    CHECK_THROWS_AS(zero_top_form(f, GradedVar{1, g2(0b01)}, alg, coarse), DomainError);
  }
}

TEST_CASE("nonzero_top_form worked examples") {
  CayleyDickson& alg = split_octonions();
  Grading coarse = Grading::coarse(3);
  GradedVar x{9, g2(0b01)};
  SUBCASE("f = p x is a P slot at n = 1") {
    Poly f = parse_poly("(x1:(1,0) * x9:(1,0))");
    auto r = nonzero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    CHECK_FALSE(r.split_case);
    REQUIRE(r.slots.size() == 1);
    CHECK(r.slots[0].family == 'P');
    CHECK(r.slots[0].i == 0);
  }
  SUBCASE("f = z (y x) with <g(z),g(x)> = Z2^2 lands in the z case") {
    Poly f = parse_poly("(x1:(0,1) * (x2:(1,0) * x9:(1,0)))");
    auto r = nonzero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    CHECK(r.split_case);
    REQUIRE(r.slots.size() == 1);
    CHECK(r.slots[0].has_z);
  }
  SUBCASE("f = x y with g(x) = g(y) is an H-family slot") {
    Poly f = parse_poly("(x9:(1,0) * x1:(1,0))");
    auto r = nonzero_top_form(f, x, alg, coarse);
    REQUIRE(r.ok);
    REQUIRE(r.slots.size() == 1);
    CHECK(r.slots[0].family == 'H');
    CHECK(r.slots[0].i == 1);
  }
  SUBCASE("zero-component variables are rejected") {
    Poly f = parse_poly("(x1:(0,0) * x9:(1,0))");
    CHECK_THROWS_AS(nonzero_top_form(f, x, alg, coarse), DomainError);
  }
  SUBCASE("reassembly is evaluation-equal at degree 3") {
    Poly f = parse_poly("((x1:(1,0) * x9:(1,0)) * x2:(1,0)) - 2 (x9:(1,0) * (x1:(1,0) * x2:(1,0)))");
    auto r = nonzero_top_form(f, GradedVar{9, g2(0b01)}, alg, coarse);
    REQUIRE(r.ok);
    auto asg = generic_assignment(alg, coarse, poly_vars(f));
    CHECK(eval_poly(alg, f, asg) == eval_poly(alg, r.reassembled, asg));
  }
}

TEST_CASE("split_two_components") {
  CayleyDickson& alg = split_octonions();
  Grading coarse = Grading::coarse(3);
  Term a = L(1, g2(0b01)), b = L(2, g2(0b10));
  SUBCASE("already split") {
    auto r = split_two_components(Term::mul(a, b), alg, coarse);
    CHECK(r.sign == 1);
    CHECK(r.w == a);
    CHECK(r.v == b);
  }
  SUBCASE("swapped input anticommutes") {
    auto r = split_two_components(Term::mul(b, a), alg, coarse);
    CHECK(r.sign == -1);
    CHECK(r.w == a);
    CHECK(r.v == b);
  }
  SUBCASE("mixed word splits with an evaluation certificate") {
    Term a2 = L(3, g2(0b01));
    Term u = Term::mul(Term::mul(a, b), a2);
    auto r = split_two_components(u, alg, coarse);
    // w on the greater component, single-component words
    for (const auto& leaf : term_leaves(r.w)) CHECK(leaf.grade == g2(0b01));
    for (const auto& leaf : term_leaves(r.v)) CHECK(leaf.grade == g2(0b10));
    auto asg = generic_assignment(alg, coarse, poly_vars(Poly::monomial(1, u)));
    CHECK(eval_term(alg, u, asg) ==
          elem_scale(eval_term(alg, Term::mul(r.w, r.v), asg), rat(r.sign)));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(split_two_components(Term::mul(a, L(2, g2(0))), alg, coarse), DomainError);
    CHECK_THROWS_AS(split_two_components(Term::mul(a, L(2, g2(0b01))), alg, coarse),
                    DomainError);
    Term three = Term::mul(Term::mul(a, b), L(4, g2(0b11)));
    CHECK_THROWS_AS(split_two_components(three, alg, coarse), DomainError);
  }
}

TEST_CASE("condition gates: eq16 instances") {
  auto der = derived_rules(split_octonions());
  const Rule& eq16 = der[2];
  // applicable: v,w outside <g(b)>
  CHECK(eq16.cond({g2(0b01), g2(0b01), g2(0b10)}));
  // the stated side condition excludes g(v) = g(b) even though the
  // equation happens to hold there
  std::vector<GroupElem> outside{g2(0b01), g2(0b11), g2(0b01)};
  CHECK_FALSE(eq16.cond(outside));
  CHECK(is_identity_multilinear(eq16.identity_poly(outside), split_octonions(),
                                Grading::coarse(3))
            .identity);
  // g(v) = g(w) = g(b) violates the side condition
  CHECK_FALSE(eq16.cond({g2(0b01), g2(0b01), g2(0b01)}));
}

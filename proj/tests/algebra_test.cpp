#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "octgi/algebra.hpp"
#include "octgi/error.hpp"
#include "test_util.hpp"

using namespace octgi;
using testutil::cd_conj_oracle;
using testutil::cd_mul_oracle;
using testutil::random_elem;
using testutil::to_elem;

namespace {

CayleyDickson make_default() { return CayleyDickson(AlgebraParams::split_default(3)); }

CayleyDickson make_alphas(std::vector<long> a) {
  AlgebraParams p;
  p.rank = static_cast<int>(a.size());
  for (long x : a) p.alphas.push_back(rat(x));
  return CayleyDickson(p);
}

std::string table_string(const CayleyDickson& alg) {
  std::ostringstream out;
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      const auto& t = alg.table(i, j);
      if (j) out << "\t";
      std::string lbl;
      for (int k = 0; k < alg.rank(); ++k) lbl += ((t.basis >> k) & 1) ? '1' : '0';
      Rational c = t.coeff;
      if (c == 1)
        out << "e" << lbl;
      else if (c == -1)
        out << "-e" << lbl;
      else
        out << rat_str(c) << "e" << lbl;
    }
    out << "\n";
  }
  return out.str();
}

// Golden 8x8 table for alphas (1,1,1), frozen from the recursive doubling
// oracle (regenerate with OCTGI_REGEN_GOLDEN=1).
const char* kGoldenSplitTable =
    "e000\te100\te010\te110\te001\te101\te011\te111\n"
    "e100\te000\t-e110\t-e010\t-e101\t-e001\te111\te011\n"
    "e010\te110\te000\te100\t-e011\t-e111\t-e001\t-e101\n"
    "e110\te010\t-e100\t-e000\t-e111\t-e011\te101\te001\n"
    "e001\te101\te011\te111\te000\te100\te010\te110\n"
    "e101\te001\te111\te011\t-e100\t-e000\t-e110\t-e010\n"
    "e011\t-e111\te001\t-e101\t-e010\te110\t-e000\te100\n"
    "e111\t-e011\te101\t-e001\t-e110\te010\t-e100\te000\n";

}  // namespace

TEST_CASE("structure table agrees with the doubling-formula oracle") {
  for (auto alphas : {std::vector<long>{1, 1, 1}, std::vector<long>{1, 2, 3}}) {
    CayleyDickson alg = make_alphas(alphas);
    std::vector<Rational> as;
    for (long a : alphas) as.push_back(rat(a));
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        auto lib = alg.multiply(alg.basis_elem(i), alg.basis_elem(j));
        auto oracle = cd_mul_oracle(alg.basis_elem(i).coords, alg.basis_elem(j).coords, as);
        CHECK(lib.coords == oracle);
      }
  }
}

TEST_CASE("golden split-octonion table") {
  CayleyDickson alg = make_default();
  std::string got = table_string(alg);
  if (std::getenv("OCTGI_REGEN_GOLDEN")) std::cerr << got;
  CHECK(got == kGoldenSplitTable);
}

TEST_CASE("multiplication basics") {
  CayleyDickson alg = make_default();
  std::mt19937_64 rng(5);
  SUBCASE("1 is the identity") {
    for (int i = 0; i < 20; ++i) {
      QElem x = random_elem(rng, 8);
      CHECK(alg.multiply(alg.one(), x) == x);
      CHECK(alg.multiply(x, alg.one()) == x);
    }
  }
  SUBCASE("v*v = alpha at every doubling level") {
    CayleyDickson a123 = make_alphas({1, 2, 3});
    for (int level = 1; level <= 3; ++level) {
      QElem v = a123.basis_elem(1 << (level - 1));
      CHECK(a123.multiply(v, v) == a123.scalar(a123.params().alphas[level - 1]));
    }
  }
  SUBCASE("random products agree with the oracle") {
    std::vector<Rational> as{rat(1), rat(1), rat(1)};
    for (int i = 0; i < 30; ++i) {
      QElem x = random_elem(rng, 8), y = random_elem(rng, 8);
      CHECK(alg.multiply(x, y).coords == cd_mul_oracle(x.coords, y.coords, as));
    }
  }
}

TEST_CASE("conjugation") {
  CayleyDickson alg = make_default();
  CHECK(alg.conj(alg.one()) == alg.one());
  for (int b = 1; b < 8; ++b) {
    CHECK(alg.conj(alg.basis_elem(b)) == elem_scale(alg.basis_elem(b), rat(-1)));
    CHECK(alg.conj(alg.basis_elem(b)).coords == cd_conj_oracle(alg.basis_elem(b).coords));
  }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    QElem x = random_elem(rng, 8);
    CHECK(alg.conj(alg.conj(x)) == x);
    CHECK(alg.conj(x).coords == cd_conj_oracle(x.coords));
  }
}

TEST_CASE("trace and norm") {
  CayleyDickson alg = make_default();
  CHECK(alg.trace(alg.one()) == 2);
  CHECK(alg.norm(alg.one()) == 1);
  SUBCASE("basis norms are signed alpha products") {
    CayleyDickson a123 = make_alphas({1, 2, 3});
    for (int b = 0; b < 8; ++b) {
      Rational expect(1);
      int pop = 0;
      for (int k = 0; k < 3; ++k)
        if ((b >> k) & 1) {
          expect *= a123.params().alphas[k];
          ++pop;
        }
      if (pop % 2) expect = -expect;
      CHECK(a123.norm(a123.basis_elem(b)) == expect);
    }
  }
  SUBCASE("rank equation x^2 - t(x) x + n(x) = 0") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      QElem x = random_elem(rng, 8);
      QElem lhs = alg.multiply(x, x);
      lhs = elem_sub(lhs, elem_scale(x, alg.trace(x)));
      lhs = elem_add(lhs, alg.scalar(alg.norm(x)));
      CHECK(lhs.is_zero());
    }
  }
}

TEST_CASE("composition law, alternativity, anti-automorphism") {
  for (auto alphas : {std::vector<long>{1, 1, 1}, std::vector<long>{1, 2, 3}}) {
    CayleyDickson alg = make_alphas(alphas);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      QElem x = random_elem(rng, 8), y = random_elem(rng, 8);
      CHECK(alg.norm(alg.multiply(x, y)) == alg.norm(x) * alg.norm(y));
      auto assoc = [&](const QElem& a, const QElem& b, const QElem& c) {
        return elem_sub(alg.multiply(alg.multiply(a, b), c),
                        alg.multiply(a, alg.multiply(b, c)));
      };
      CHECK(assoc(x, x, y).is_zero());
      CHECK(assoc(x, y, y).is_zero());
      CHECK(alg.conj(alg.multiply(x, y)) == alg.multiply(alg.conj(y), alg.conj(x)));
    }
  }
}

TEST_CASE("gradings") {
  CayleyDickson alg = make_default();
  Grading fine = Grading::fine(3), coarse = Grading::coarse(3);
  SUBCASE("grading closure on the full table") {
    for (const Grading& g : {fine, coarse})
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          const auto& t = alg.table(i, j);
          CHECK(g.degree_of(t.basis) == g.degree_of(i) + g.degree_of(j));
        }
  }
  SUBCASE("components and projections") {
    std::mt19937_64 rng(17);
    QElem x = random_elem(rng, 8);
    QElem zero_part = alg.component(x, GroupElem::zero(2), coarse);
    for (int b = 0; b < 8; ++b) {
      bool in_zero = b == 0b000 || b == 0b001;  // e000, e100
      CHECK(zero_part.coords[b] == (in_zero ? x.coords[b] : Rational(0)));
    }
    QElem sum = alg.zero();
    for (const auto& h : coarse.components()) sum = elem_add(sum, alg.component(x, h, coarse));
    CHECK(sum == x);
    CHECK(alg.component(alg.basis_elem(6), GroupElem(0b11, 2), coarse) == alg.basis_elem(6));
  }
  SUBCASE("basis elements are homogeneous with the expected degrees") {
    for (int b = 0; b < 8; ++b) {
      CHECK(fine.degree_of(b) == GroupElem(static_cast<unsigned>(b), 3));
      CHECK(coarse.degree_of(b) == project_drop_first(GroupElem(static_cast<unsigned>(b), 3)));
    }
  }
}

TEST_CASE("Hurwitz relations on component subalgebras") {
  CayleyDickson alg = make_default();
  for (const Grading& g : {Grading::fine(3), Grading::coarse(3)}) {
    // enumerate subgroups as closures of generator subsets
    std::vector<std::vector<GroupElem>> subgroups;
    auto elems = all_elements(g.group_rank());
    std::set<std::vector<unsigned>> seen;
    for (std::size_t m = 0; m < (1u << elems.size()); ++m) {
      std::vector<GroupElem> gens;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (m & (1u << i)) gens.push_back(elems[i]);
      Subgroup s = subgroup_generated(gens, g.group_rank());
      std::vector<unsigned> key;
      for (const auto& e : s.members()) key.push_back(e.bits());
      if (seen.insert(key).second) subgroups.push_back(s.members());
    }
    for (const auto& H : subgroups) {
      auto in_H = [&](const GroupElem& d) {
        for (const auto& h : H)
          if (h == d) return true;
        return false;
      };
      for (int vb = 0; vb < 8; ++vb) {
        if (in_H(g.degree_of(vb))) continue;
        QElem v = alg.basis_elem(vb);
        CHECK(alg.conj(v) == elem_scale(v, rat(-1)));
        for (int ab = 0; ab < 8; ++ab) {
          if (!in_H(g.degree_of(ab))) continue;
          QElem a = alg.basis_elem(ab);
          CHECK(alg.multiply(a, v) == alg.multiply(v, alg.conj(a)));
          for (int bb = 0; bb < 8; ++bb) {
            if (!in_H(g.degree_of(bb))) continue;
            QElem b = alg.basis_elem(bb);
            CHECK(alg.multiply(a, alg.multiply(v, b)) ==
                  alg.multiply(v, alg.multiply(alg.conj(a), b)));
            CHECK(alg.multiply(alg.multiply(v, b), a) ==
                  alg.multiply(v, alg.multiply(a, b)));
            CHECK(alg.multiply(alg.multiply(v, a), alg.multiply(v, b)) ==
                  alg.multiply(alg.multiply(v, v), alg.multiply(b, alg.conj(a))));
          }
        }
      }
    }
  }
}

TEST_CASE("octonions are not associative but homogeneous elements are invertible") {
  CayleyDickson alg = make_default();
  bool witness = false;
  for (int i = 0; i < 8 && !witness; ++i)
    for (int j = 0; j < 8 && !witness; ++j)
      for (int k = 0; k < 8 && !witness; ++k) {
        QElem a = alg.basis_elem(i), b = alg.basis_elem(j), c = alg.basis_elem(k);
        if (!(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c))))
          witness = true;
      }
  CHECK(witness);
  for (int b = 0; b < 8; ++b) CHECK(alg.norm(alg.basis_elem(b)) != 0);
}

TEST_CASE("v units") {
  CayleyDickson alg = make_default();
  CHECK(alg.v_unit(GroupElem(0b00, 2)) == alg.one());
  CHECK(alg.v_unit(GroupElem(0b01, 2)) == alg.basis_elem(2));  // e010
  CHECK(alg.v_unit(GroupElem(0b10, 2)) == alg.basis_elem(4));  // e001
  CHECK(alg.v_unit(GroupElem(0b11, 2)) ==
        alg.multiply(alg.basis_elem(2), alg.basis_elem(4)));
  Grading coarse = Grading::coarse(3);
  for (const auto& h : coarse.components()) {
    QElem v = alg.v_unit(h);
    CHECK(alg.norm(v) != 0);
    if (!v.is_zero() && !h.is_zero()) CHECK(alg.homogeneous_degree(v, coarse) == h);
  }
}

TEST_CASE("tilde") {
  CayleyDickson alg = make_default();
  Grading coarse = Grading::coarse(3);
  std::mt19937_64 rng(21);
  SUBCASE("tilde is conj on the zero component") {
    QElem x = alg.zero();
    x.coords[0] = rat(3, 2);
    x.coords[1] = rat(-2);
    CHECK(alg.tilde(x, coarse) == alg.conj(x));
  }
  SUBCASE("tilde fixes the v units") {
    for (const auto& h : coarse.components()) CHECK(alg.tilde(alg.v_unit(h), coarse) == alg.v_unit(h));
  }
  SUBCASE("tilde is an involution on homogeneous elements") {
    for (const auto& h : coarse.components()) {
      for (int rep = 0; rep < 10; ++rep) {
        QElem x = alg.zero();
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        for (int b : coarse.component_basis(h)) x.coords[b] = rat(num(rng), den(rng));
        if (x.is_zero()) continue;
        CHECK(alg.tilde(alg.tilde(x, coarse), coarse) == x);
      }
    }
  }
  SUBCASE("tilde_full extends linearly") {
    QElem x = random_elem(rng, 8);
    QElem expect = alg.zero();
    for (const auto& h : coarse.components()) {
      QElem part = alg.component(x, h, coarse);
      if (!part.is_zero()) expect = elem_add(expect, alg.tilde(part, coarse));
    }
    CHECK(alg.tilde_full(x, coarse) == expect);
  }
  SUBCASE("non-homogeneous input to the strict variant is rejected") {
    QElem x = alg.zero();
    x.coords[2] = 1;
    x.coords[4] = 1;
    CHECK_THROWS_AS(alg.tilde(x, coarse), DomainError);
  }
}

TEST_CASE("bracket powers") {
  CayleyDickson alg = make_default();
  Grading coarse = Grading::coarse(3);
  std::mt19937_64 rng(31);
  for (const auto& h : coarse.components()) {
    QElem x = alg.zero();
    std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
    for (int b : coarse.component_basis(h)) x.coords[b] = rat(num(rng), den(rng));
    if (x.is_zero()) x.coords[coarse.component_basis(h)[0]] = 1;
    CHECK(alg.bracket_power(x, 0, coarse) == alg.one());
    CHECK(alg.bracket_power(x, 1, coarse) == alg.tilde(x, coarse));
    CHECK(alg.bracket_power(x, 2, coarse) == alg.multiply(alg.tilde(x, coarse), x));
  }
}

TEST_CASE("zero divisor witness") {
  CayleyDickson alg = make_default();
  SUBCASE("split octonions have a witness") {
    auto w = alg.find_zero_divisor_witness();
    REQUIRE(w.has_value());
    CHECK_FALSE(w->x.is_zero());
    CHECK(alg.norm(w->x) == 0);
    CHECK(alg.multiply(w->idem, w->idem) == w->idem);
    CHECK_FALSE(w->idem.is_zero());
    CHECK_FALSE(w->idem == alg.one());
  }
  SUBCASE("the documented witnesses check out") {
    QElem x = elem_sub(alg.basis_elem(0), alg.basis_elem(2));  // e000 - e010
    CHECK(alg.norm(x) == 0);
    QElem e = elem_scale(elem_add(alg.one(), alg.basis_elem(2)), rat(1, 2));
    CHECK(alg.multiply(e, e) == e);
  }
  SUBCASE("a definite quaternion algebra has none") {
    AlgebraParams p;
    p.rank = 2;
    p.alphas = {rat(-1), rat(-1)};
    CayleyDickson ham(p);
    CHECK_FALSE(ham.find_zero_divisor_witness().has_value());
  }
}

TEST_CASE("config parsing") {
  auto [p, grading] = parse_algebra_config("rank=3\nalpha1=1\nalpha2=2\nalpha3=3/2\ngrading=z2_2\n");
  CHECK(p.rank == 3);
  CHECK(p.alphas[2] == rat(3, 2));
  CHECK(grading == "z2_2");
  auto [q, g2] = parse_algebra_config("# defaults\n");
  CHECK(q.rank == 3);
  CHECK(q.alphas == std::vector<Rational>{1, 1, 1});
  CHECK(g2.empty());
  CHECK_THROWS_AS(parse_algebra_config("bogus=1\n"), DomainError);
  CHECK_THROWS_AS(parse_algebra_config("alpha1=0\n"), DomainError);
}

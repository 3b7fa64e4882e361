#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "octgi/error.hpp"
#include "octgi/group.hpp"

using namespace octgi;

namespace {

GroupElem ge(unsigned bits, int rank) { return GroupElem(bits, rank); }

// brute-force closure over packed values, independent of the library
std::set<unsigned> closure_oracle(const std::vector<unsigned>& gens) {
  std::set<unsigned> s{0u};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<unsigned> next = s;
    for (unsigned a : s) {
      for (unsigned g : gens) next.insert(a ^ g);
      for (unsigned b : s) next.insert(a ^ b);
    }
    if (next != s) {
      s = next;
      grew = true;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("every element is self-inverse") {
  for (int rank = 1; rank <= 3; ++rank)
    for (const auto& e : all_elements(rank)) CHECK((e + e).is_zero());
}

TEST_CASE("subgroup generation") {
  SUBCASE("empty generating set gives the trivial subgroup") {
    Subgroup s = subgroup_generated({}, 3);
    CHECK(s.order() == 1);
    CHECK(s.contains(ge(0, 3)));
  }
  SUBCASE("two independent generators span Z2^2") {
    Subgroup s = subgroup_generated({ge(0b01, 2), ge(0b10, 2)});
    CHECK(s.order() == 4);
  }
  SUBCASE("<(1,1,0),(0,1,1)> has order 4") {
    // (1,1,0) packs to 0b011, (0,1,1) to 0b110
    std::set<unsigned> expect = closure_oracle({0b011u, 0b110u});
    CHECK(expect == std::set<unsigned>{0b000u, 0b011u, 0b101u, 0b110u});
    Subgroup s = subgroup_generated({ge(0b011, 3), ge(0b110, 3)});
    CHECK(s.order() == 4);
    std::set<unsigned> got;
    for (const auto& m : s.members()) got.insert(m.bits());
    CHECK(got == expect);
    CHECK_FALSE(s.contains(ge(0b111, 3)));
  }
  SUBCASE("mixed ranks are rejected") {
    CHECK_THROWS_AS(subgroup_generated({ge(1, 2), ge(1, 3)}, 2), DimensionError);
  }
  SUBCASE("generation is idempotent") {
    Subgroup s = subgroup_generated({ge(0b011, 3), ge(0b110, 3)});
    Subgroup s2 = subgroup_generated(s.members(), 3);
    CHECK(s2.order() == s.order());
    for (const auto& m : s.members()) CHECK(s2.contains(m));
  }
}

TEST_CASE("membership") {
  Subgroup trivial = subgroup_generated({}, 3);
  CHECK(trivial.contains(ge(0, 3)));
  Subgroup line = subgroup_generated({ge(0b10, 2)});  // {(0,0),(0,1)}
  CHECK_FALSE(line.contains(ge(0b01, 2)));            // (1,0) not a member
  CHECK(generated_contains({ge(0b10, 2)}, ge(0b10, 2)));
  CHECK_FALSE(generated_contains({ge(0b10, 2)}, ge(0b01, 2)));
  CHECK(generated_order({ge(0b011, 3), ge(0b110, 3)}) == 4);
}

TEST_CASE("project_drop_first") {
  CHECK(project_drop_first(ge(0b000, 3)) == ge(0b00, 2));
  CHECK(project_drop_first(ge(0b001, 3)) == ge(0b00, 2));  // (1,0,0) -> (0,0)
  CHECK(project_drop_first(ge(0b011, 3)) == ge(0b01, 2));  // (1,1,0) -> (1,0)
  CHECK_THROWS_AS(project_drop_first(ge(0b01, 2)), DimensionError);
  // group homomorphism, exhaustively
  for (const auto& a : all_elements(3))
    for (const auto& b : all_elements(3))
      CHECK(project_drop_first(a + b) == project_drop_first(a) + project_drop_first(b));
}

TEST_CASE("pinned total order: zero greatest, lex otherwise") {
  // (0,1) < (1,0) < (1,1) < (0,0)
  GroupElem e01 = ge(0b10, 2), e10 = ge(0b01, 2), e11 = ge(0b11, 2), e00 = ge(0b00, 2);
  CHECK(group_less(e01, e10));
  CHECK(group_less(e10, e11));
  CHECK(group_less(e11, e00));
  for (int rank = 1; rank <= 3; ++rank) {
    GroupElem zero = GroupElem::zero(rank);
    for (const auto& e : all_elements(rank))
      if (!e.is_zero()) CHECK(group_less(e, zero));
  }
}

TEST_CASE("textual form round-trips") {
  CHECK(ge(0b01, 2).str() == "(1,0)");
  CHECK(ge(0b10, 2).str() == "(0,1)");
  CHECK(ge(0b110, 3).str() == "(0,1,1)");
  for (int rank = 1; rank <= 3; ++rank)
    for (const auto& e : all_elements(rank)) {
      std::size_t pos = 0;
      CHECK(GroupElem::parse(e.str(), pos) == e);
    }
  std::size_t pos = 0;
  CHECK_THROWS_AS(GroupElem::parse("(2,0)", pos), ParseError);
}

#include "octgi/group.hpp"

#include <algorithm>
#include <bit>

#include "octgi/error.hpp"

namespace octgi {

GroupElem::GroupElem(unsigned bits, int rank) {
  if (rank < 1 || rank > 3) throw DimensionError("group rank must be 1, 2 or 3");
  if (bits >= (1u << rank)) throw DimensionError("group element bits out of range");
  bits_ = static_cast<std::uint8_t>(bits);
  rank_ = static_cast<std::uint8_t>(rank);
}

GroupElem GroupElem::operator+(const GroupElem& o) const {
  if (rank_ != o.rank_) throw DimensionError("group rank mismatch in +");
  return GroupElem(bits_ ^ o.bits_, rank_);
}

unsigned GroupElem::order_key() const {
  if (bits_ == 0) return 1u << rank_;
  if (rank_ == 2) {
    // pinned: (0,1) < (1,0) < (1,1) < (0,0)
    return static_cast<unsigned>(bit(0)) << 1 | static_cast<unsigned>(bit(1));
  }
  // ranks 1 and 3: nonzero elements ascend by packed basis label
  return bits_;
}

std::string GroupElem::str() const {
  std::string s = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += bit(i) ? '1' : '0';
  }
  s += ')';
  return s;
}

GroupElem GroupElem::parse(const std::string& text, std::size_t& pos) {
  auto need = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' in group element", pos);
    ++pos;
  };
  need('(');
  unsigned bits = 0;
  int rank = 0;
  while (true) {
    if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1'))
      throw ParseError("expected bit in group element", pos);
    if (rank >= 3) throw ParseError("group element has more than 3 bits", pos);
    if (text[pos] == '1') bits |= 1u << rank;
    ++rank;
    ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  need(')');
  return GroupElem(bits, rank);
}

Subgroup::Subgroup(int rank, std::vector<GroupElem> members, std::vector<GroupElem> generators)
    : rank_(rank), members_(std::move(members)), generators_(std::move(generators)) {}

bool Subgroup::contains(const GroupElem& e) const {
  if (e.rank() != rank_) throw DimensionError("group rank mismatch in contains");
  return std::any_of(members_.begin(), members_.end(),
                     [&](const GroupElem& m) { return m == e; });
}

namespace {

unsigned closure_mask(const std::vector<GroupElem>& gens, int rank) {
  for (const auto& g : gens)
    if (g.rank() != rank) throw DimensionError("mixed group ranks in subgroup generators");
  unsigned mask = 1u;  // zero element
  bool grew = true;
  while (grew) {
    grew = false;
    for (unsigned a = 0; a < (1u << rank); ++a) {
      if (!(mask & (1u << a))) continue;
      for (const auto& g : gens) {
        unsigned b = a ^ g.bits();
        if (!(mask & (1u << b))) {
          mask |= 1u << b;
          grew = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

Subgroup subgroup_generated(const std::vector<GroupElem>& gens, int rank) {
  unsigned mask = closure_mask(gens, rank);
  std::vector<GroupElem> members;
  for (unsigned b = 0; b < (1u << rank); ++b)
    if (mask & (1u << b)) members.emplace_back(b, rank);
  return Subgroup(rank, std::move(members), gens);
}

Subgroup subgroup_generated(const std::vector<GroupElem>& gens) {
  if (gens.empty()) throw DomainError("cannot infer rank from empty generator list");
  return subgroup_generated(gens, gens.front().rank());
}

namespace {

// Span of up to a few elements as a bitmask over packed values; k <= 3 keeps
// everything inside one byte.
unsigned span_mask(std::initializer_list<GroupElem> gens, int* rank_out) {
  int rank = 0;
  unsigned mask = 1u;
  for (const auto& g : gens) {
    if (rank == 0)
      rank = g.rank();
    else if (g.rank() != rank)
      throw DimensionError("mixed group ranks in subgroup span");
    unsigned next = mask;
    for (unsigned a = 0; a < 8u; ++a)
      if (mask & (1u << a)) next |= 1u << (a ^ g.bits());
    mask = next;
  }
  if (rank_out) *rank_out = rank;
  return mask;
}

}  // namespace

int generated_order(std::initializer_list<GroupElem> gens) {
  return std::popcount(span_mask(gens, nullptr));
}

bool generated_contains(std::initializer_list<GroupElem> gens, const GroupElem& e) {
  int rank = 0;
  unsigned mask = span_mask(gens, &rank);
  if (rank != 0 && rank != e.rank())
    throw DimensionError("mixed group ranks in generated_contains");
  return (mask >> e.bits()) & 1u;
}

GroupElem project_drop_first(const GroupElem& e) {
  if (e.rank() != 3) throw DimensionError("project_drop_first requires rank 3");
  return GroupElem(e.bits() >> 1, 2);
}

std::vector<GroupElem> all_elements(int rank) {
  std::vector<GroupElem> out;
  for (unsigned b = 0; b < (1u << rank); ++b) out.emplace_back(b, rank);
  return out;
}

}  // namespace octgi

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace octgi {

/// Element of the elementary abelian 2-group Z2^k, k in {1,2,3}.
///
/// The tuple (b1,...,bk) is packed with b_{i+1} in bit i, so for rank 3 the
/// packed value doubles as the basis label of the Cayley-Dickson algebra.
/// The total order places zero greatest and sorts the rest lexicographically
/// on the tuple: (0,1) < (1,0) < (1,1) < (0,0) for rank 2.
class GroupElem {
public:
  GroupElem() = default;
  GroupElem(unsigned bits, int rank);
  static GroupElem zero(int rank) { return GroupElem(0, rank); }

  int rank() const { return rank_; }
  unsigned bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  int bit(int i) const { return (bits_ >> i) & 1u; }

  /// Componentwise XOR; every element is self-inverse.
  GroupElem operator+(const GroupElem& o) const;

  bool operator==(const GroupElem& o) const { return bits_ == o.bits_ && rank_ == o.rank_; }
  bool operator!=(const GroupElem& o) const { return !(*this == o); }

  /// Sort key for the pinned total order (zero greatest, lex otherwise).
  unsigned order_key() const;

  /// "(1,0)", "(0,1,1)", ...
  std::string str() const;

  /// Parses a parenthesized bit tuple starting at text[pos]; advances pos.
  static GroupElem parse(const std::string& text, std::size_t& pos);

private:
  std::uint8_t bits_ = 0;
  std::uint8_t rank_ = 1;
};

inline bool group_less(const GroupElem& a, const GroupElem& b) {
  return a.order_key() < b.order_key();
}

/// Finitely generated subgroup of Z2^k; members are XOR-closed and contain 0.
class Subgroup {
public:
  Subgroup(int rank, std::vector<GroupElem> members, std::vector<GroupElem> generators);
  int rank() const { return rank_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<GroupElem>& members() const { return members_; }
  const std::vector<GroupElem>& generators() const { return generators_; }
  bool contains(const GroupElem& e) const;

private:
  int rank_;
  std::vector<GroupElem> members_;  // sorted by packed bits
  std::vector<GroupElem> generators_;
};

/// Smallest XOR-closed set containing the generators and zero. All
/// generators must have rank `rank` (DimensionError otherwise).
Subgroup subgroup_generated(const std::vector<GroupElem>& gens, int rank);

/// Rank inferred from a nonempty generator list.
Subgroup subgroup_generated(const std::vector<GroupElem>& gens);

/// Order of the subgroup generated by up to a few elements; fast path used
/// by rewrite-rule side conditions.
int generated_order(std::initializer_list<GroupElem> gens);
bool generated_contains(std::initializer_list<GroupElem> gens, const GroupElem& e);

/// (b1,b2,b3) -> (b2,b3): forgets the innermost doubling bit. Rank 3 only.
GroupElem project_drop_first(const GroupElem& e);

/// All 2^k elements in packed-bits order.
std::vector<GroupElem> all_elements(int rank);

}  // namespace octgi

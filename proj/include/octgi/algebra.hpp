#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octgi/error.hpp"
#include "octgi/group.hpp"
#include "octgi/rational.hpp"
#include "octgi/sympoly.hpp"

namespace octgi {

/// Parameters of the Cayley-Dickson tower over Q: one nonzero alpha per
/// doubling level. rank=1 gives K, rank=2 quaternions, rank=3 octonions.
struct AlgebraParams {
  int rank = 3;
  std::vector<Rational> alphas;  // size == rank, all nonzero

  static AlgebraParams split_default(int rank = 3);
  void validate() const;
};

/// Parses line-oriented `key=value` config (rank, alpha1..alpha3, grading).
/// Unknown keys are rejected. Returns the params plus the grading string
/// ("" when absent).
std::pair<AlgebraParams, std::string> parse_algebra_config(const std::string& text);

/// Degree map on basis labels. `fine` grades a rank-k algebra by Z2^k;
/// `coarse` forgets the innermost doubling bit and grades by Z2^(k-1).
class Grading {
public:
  static Grading fine(int algebra_rank);
  static Grading coarse(int algebra_rank);

  int group_rank() const { return group_rank_; }
  int algebra_rank() const { return algebra_rank_; }
  GroupElem degree_of(int basis_index) const { return degrees_.at(basis_index); }
  const std::vector<int>& component_basis(const GroupElem& h) const;
  std::vector<GroupElem> components() const { return all_elements(group_rank_); }
  const std::string& name() const { return name_; }

private:
  Grading(int algebra_rank, int group_rank, std::string name);
  int algebra_rank_;
  int group_rank_;
  std::string name_;
  std::vector<GroupElem> degrees_;
  std::vector<std::vector<int>> comp_basis_;  // indexed by packed bits
};

/// Coordinate vector relative to the canonical basis e_b. The scalar type is
/// Rational for concrete computation and SymPoly for generic elements.
template <class S>
struct Elem {
  std::vector<S> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!scalar_is_zero(c)) return false;
    return true;
  }
  bool operator==(const Elem& o) const { return coords == o.coords; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  static bool scalar_is_zero(const Rational& c) { return c == 0; }
  static bool scalar_is_zero(const SymPoly& c) { return c.is_zero(); }
};

using QElem = Elem<Rational>;
using GElem = Elem<SymPoly>;

template <class S>
Elem<S> elem_add(const Elem<S>& a, const Elem<S>& b) {
  if (a.coords.size() != b.coords.size()) throw DimensionError("element dimension mismatch");
  Elem<S> r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

template <class S>
Elem<S> elem_sub(const Elem<S>& a, const Elem<S>& b) {
  if (a.coords.size() != b.coords.size()) throw DimensionError("element dimension mismatch");
  Elem<S> r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

template <class S>
Elem<S> elem_scale(const Elem<S>& a, const Rational& c) {
  Elem<S> r = a;
  for (auto& x : r.coords) x = x * c;
  return r;
}

/// Embeds a rational element into the generic (polynomial-scalar) model.
GElem embed_generic(const QElem& x);

std::string elem_str(const QElem& x);

/// Exact Cayley-Dickson algebra over Q with precomputed structure constants.
///
/// Basis label b = (b1,...,bk) packed into an index (b1 least significant);
/// e_b * e_c = coeff * e_{b xor c} with coeff a signed product of alphas.
class CayleyDickson {
public:
  explicit CayleyDickson(AlgebraParams params);

  int rank() const { return params_.rank; }
  int dim() const { return 1 << params_.rank; }
  const AlgebraParams& params() const { return params_; }

  struct TableEntry {
    Rational coeff;
    int basis;
  };
  const TableEntry& table(int i, int j) const { return table_[i * dim() + j]; }

  QElem zero() const;
  QElem one() const;
  QElem basis_elem(int i) const;
  QElem scalar(const Rational& c) const;

  template <class S>
  Elem<S> multiply(const Elem<S>& x, const Elem<S>& y) const {
    check_dim(x);
    check_dim(y);
    Elem<S> out;
    out.coords.assign(dim(), S{});
    for (int i = 0; i < dim(); ++i) {
      if (Elem<S>::scalar_is_zero(x.coords[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (Elem<S>::scalar_is_zero(y.coords[j])) continue;
        const TableEntry& t = table(i, j);
        out.coords[t.basis] += (x.coords[i] * y.coords[j]) * t.coeff;
      }
    }
    return out;
  }

  /// Fixes the e_0 coordinate, negates all others (the recursive conjugate
  /// (a1,a2) -> (conj a1, -a2) unfolded).
  template <class S>
  Elem<S> conj(const Elem<S>& x) const {
    check_dim(x);
    Elem<S> out = x;
    for (int i = 1; i < dim(); ++i) out.coords[i] = -out.coords[i];
    return out;
  }

  /// t(x) = x + conj(x), a scalar; returned as its coefficient of 1.
  template <class S>
  S trace(const Elem<S>& x) const {
    check_dim(x);
    return x.coords[0] + x.coords[0];
  }

  /// n(x) = x * conj(x); raises InternalError if the product is not scalar.
  template <class S>
  S norm(const Elem<S>& x) const {
    Elem<S> p = multiply(x, conj(x));
    for (int i = 1; i < dim(); ++i)
      if (!Elem<S>::scalar_is_zero(p.coords[i]))
        throw InternalError("x * conj(x) is not a scalar");
    return p.coords[0];
  }

  template <class S>
  Elem<S> component(const Elem<S>& x, const GroupElem& h, const Grading& g) const {
    check_dim(x);
    if (g.algebra_rank() != rank()) throw DimensionError("grading rank mismatch");
    if (h.rank() != g.group_rank()) throw DimensionError("component degree rank mismatch");
    Elem<S> out;
    out.coords.assign(dim(), S{});
    for (int i : g.component_basis(h)) out.coords[i] = x.coords[i];
    return out;
  }

  /// Distinguished invertible homogeneous units for the coarse grading:
  /// v_0 = 1, v for a single doubling bit is that level's unit, and products
  /// of those (ascending level) otherwise.
  QElem v_unit(const GroupElem& h) const;

  /// For x homogeneous of coarse degree h: writes x = v_h * x0 with x0 in the
  /// zero component and returns v_h * conj(x0).
  template <class S>
  Elem<S> tilde(const Elem<S>& x, const Grading& coarse) const {
    GroupElem h = homogeneous_degree(x, coarse);
    return tilde_homogeneous(x, h, coarse);
  }

  /// Linear extension of tilde over the coarse components.
  template <class S>
  Elem<S> tilde_full(const Elem<S>& x, const Grading& coarse) const {
    Elem<S> out;
    out.coords.assign(dim(), S{});
    for (const auto& h : coarse.components()) {
      Elem<S> part = component(x, h, coarse);
      if (part.is_zero()) continue;
      out = elem_add(out, tilde_homogeneous(part, h, coarse));
    }
    return out;
  }

  /// a^[0] = 1, a^[n+1] = a^[n] * tilde(a) for even n, a^[n] * a for odd n.
  template <class S>
  Elem<S> bracket_power(const Elem<S>& x, int n, const Grading& coarse) const {
    Elem<S> acc;
    acc.coords.assign(dim(), S{});
    acc.coords[0] = S{} + one_scalar<S>();
    if (n == 0) return acc;
    Elem<S> tx = tilde(x, coarse);
    for (int k = 0; k < n; ++k) acc = multiply(acc, (k % 2 == 0) ? tx : x);
    return acc;
  }

  struct ZeroDivisorWitness {
    QElem x;     // nonzero with n(x) = 0
    QElem idem;  // idempotent distinct from 0 and 1
  };

  /// Searches integer coordinate vectors with entries in {-2..2} for a norm
  /// isotropic x and derives an idempotent from one with nonzero trace.
  std::optional<ZeroDivisorWitness> find_zero_divisor_witness() const;

  /// Degree of a homogeneous element (DomainError if mixed or zero).
  template <class S>
  GroupElem homogeneous_degree(const Elem<S>& x, const Grading& g) const {
    check_dim(x);
    bool found = false;
    GroupElem deg = GroupElem::zero(g.group_rank());
    for (int i = 0; i < dim(); ++i) {
      if (Elem<S>::scalar_is_zero(x.coords[i])) continue;
      GroupElem d = g.degree_of(i);
      if (!found) {
        deg = d;
        found = true;
      } else if (!(d == deg)) {
        throw DomainError("element is not homogeneous");
      }
    }
    if (!found) throw DomainError("zero element has no degree");
    return deg;
  }

private:
  template <class S>
  void check_dim(const Elem<S>& x) const {
    if (static_cast<int>(x.coords.size()) != dim())
      throw DimensionError("element dimension mismatch");
  }

  template <class S>
  static S one_scalar() {
    if constexpr (std::is_same_v<S, Rational>)
      return Rational(1);
    else
      return SymPoly::constant(1);
  }

  template <class S>
  Elem<S> tilde_homogeneous(const Elem<S>& x, const GroupElem& h, const Grading& coarse) const {
    QElem v = v_unit(h);
    Rational nv = norm(v);
    // x0 = v^-1 x = conj(v) x / n(v); two-generated subalgebras associate,
    // so v * x0 == x exactly (asserted).
    Elem<S> x0 = embed_mul_left(conj(v), x);
    x0 = elem_scale(x0, Rational(1 / nv));
    Elem<S> back = embed_mul_left(v, x0);
    if (!(back == x)) throw InternalError("tilde: v_h * x0 != x");
    GroupElem zero_h = GroupElem::zero(coarse.group_rank());
    if (!(component(x0, zero_h, coarse) == x0))
      throw InternalError("tilde: x0 not in the zero component");
    return embed_mul_left(v, conj(x0));
  }

  template <class S>
  Elem<S> embed_mul_left(const QElem& a, const Elem<S>& x) const {
    if constexpr (std::is_same_v<S, Rational>) {
      return multiply(a, x);
    } else {
      return multiply(embed_generic(a), x);
    }
  }

  AlgebraParams params_;
  std::vector<TableEntry> table_;
};

}  // namespace octgi

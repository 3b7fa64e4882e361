#include "octgi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace octgi {

AlgebraParams AlgebraParams::split_default(int rank) {
  AlgebraParams p;
  p.rank = rank;
  p.alphas.assign(rank, Rational(1));
  p.validate();
  return p;
}

void AlgebraParams::validate() const {
  if (rank < 1 || rank > 3) throw DomainError("algebra rank must be 1, 2 or 3");
  if (static_cast<int>(alphas.size()) != rank)
    throw DomainError("expected one alpha per doubling level");
  for (const auto& a : alphas)
    if (a == 0) throw DomainError("Cayley-Dickson parameters must be nonzero");
}

std::pair<AlgebraParams, std::string> parse_algebra_config(const std::string& text) {
  AlgebraParams p;
  p.rank = 3;
  std::map<int, Rational> alphas;
  std::string grading;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "rank") {
      p.rank = std::stoi(val);
    } else if (key == "alpha1" || key == "alpha2" || key == "alpha3") {
      alphas[key[5] - '0'] = rat_parse(val);
    } else if (key == "grading") {
      grading = val;
    } else {
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  p.alphas.assign(p.rank, Rational(1));
  for (const auto& [lvl, a] : alphas) {
    if (lvl > p.rank) throw DomainError("alpha" + std::to_string(lvl) + " exceeds rank");
    p.alphas[lvl - 1] = a;
  }
  p.validate();
  return {p, grading};
}

Grading::Grading(int algebra_rank, int group_rank, std::string name)
    : algebra_rank_(algebra_rank), group_rank_(group_rank), name_(std::move(name)) {
  int dim = 1 << algebra_rank_;
  degrees_.reserve(dim);
  comp_basis_.assign(1u << group_rank_, {});
  for (int b = 0; b < dim; ++b) {
    unsigned bits = group_rank_ == algebra_rank_ ? static_cast<unsigned>(b)
                                                 : static_cast<unsigned>(b) >> 1;
    GroupElem d(bits, group_rank_);
    degrees_.push_back(d);
    comp_basis_[d.bits()].push_back(b);
  }
}

Grading Grading::fine(int algebra_rank) {
  return Grading(algebra_rank, algebra_rank, "z2_" + std::to_string(algebra_rank));
}

Grading Grading::coarse(int algebra_rank) {
  if (algebra_rank < 2) throw DomainError("coarse grading needs algebra rank >= 2");
  return Grading(algebra_rank, algebra_rank - 1, "z2_" + std::to_string(algebra_rank - 1));
}

const std::vector<int>& Grading::component_basis(const GroupElem& h) const {
  if (h.rank() != group_rank_) throw DimensionError("component degree rank mismatch");
  return comp_basis_[h.bits()];
}

GElem embed_generic(const QElem& x) {
  GElem out;
  out.coords.reserve(x.coords.size());
  for (const auto& c : x.coords) out.coords.push_back(SymPoly::constant(c));
  return out;
}

std::string elem_str(const QElem& x) {
  int rank = 0;
  while ((1 << rank) < static_cast<int>(x.coords.size())) ++rank;
  std::string s;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    Rational c = x.coords[i];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (a != 1) s += rat_str(a) + "*";
    s += "e";
    for (int k = 0; k < rank; ++k) s += ((i >> k) & 1) ? '1' : '0';
  }
  return s.empty() ? "0" : s;
}

namespace {

// Product of basis elements at the given level by the doubling formula
// (a1,a2)(a3,a4) = (a1 a3 + alpha a4 conj(a2), conj(a1) a4 + a3 a2).
// conj(e_i) = -e_i except conj(e_0) = e_0.
std::pair<Rational, int> basis_mul(int level, int i, int j,
                                   const std::vector<Rational>& alphas) {
  if (level == 0) return {Rational(1), 0};
  int half = 1 << (level - 1);
  int ib = i >= half, jb = j >= half;
  int il = i & (half - 1), jl = j & (half - 1);
  auto conj_sign = [](int idx) { return idx == 0 ? Rational(1) : Rational(-1); };
  if (!ib && !jb) {
    return basis_mul(level - 1, il, jl, alphas);
  }
  if (!ib && jb) {
    // (a1,0)(0,a4) = (0, conj(a1) a4)
    auto [c, b] = basis_mul(level - 1, il, jl, alphas);
    return {conj_sign(il) * c, b + half};
  }
  if (ib && !jb) {
    // (0,a2)(a3,0) = (0, a3 a2)
    auto [c, b] = basis_mul(level - 1, jl, il, alphas);
    return {c, b + half};
  }
  // (0,a2)(0,a4) = (alpha a4 conj(a2), 0)
  auto [c, b] = basis_mul(level - 1, jl, il, alphas);
  return {alphas[level - 1] * conj_sign(il) * c, b};
}

}  // namespace

CayleyDickson::CayleyDickson(AlgebraParams params) : params_(std::move(params)) {
  params_.validate();
  int d = dim();
  table_.resize(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto [c, b] = basis_mul(params_.rank, i, j, params_.alphas);
      if (b != (i ^ j)) throw InternalError("structure table violates grading closure");
      table_[i * d + j] = TableEntry{c, b};
    }
}

QElem CayleyDickson::zero() const {
  QElem e;
  e.coords.assign(dim(), Rational(0));
  return e;
}

QElem CayleyDickson::one() const { return basis_elem(0); }

QElem CayleyDickson::basis_elem(int i) const {
  if (i < 0 || i >= dim()) throw DimensionError("basis index out of range");
  QElem e = zero();
  e.coords[i] = 1;
  return e;
}

QElem CayleyDickson::scalar(const Rational& c) const {
  QElem e = zero();
  e.coords[0] = c;
  return e;
}

QElem CayleyDickson::v_unit(const GroupElem& h) const {
  if (h.rank() != rank() - 1) throw DimensionError("v_unit degree rank mismatch");
  QElem acc = one();
  for (int i = 0; i < h.rank(); ++i) {
    if (!h.bit(i)) continue;
    // unit of doubling level i+2: basis label with only bit i+1 set
    acc = multiply(acc, basis_elem(1 << (i + 1)));
  }
  return acc;
}

std::optional<CayleyDickson::ZeroDivisorWitness> CayleyDickson::find_zero_divisor_witness() const {
  int d = dim();
  // Precompute the norm form's Gram data so each candidate costs a handful
  // of rational operations instead of a full multiplication.
  std::vector<Rational> diag(d);
  std::vector<std::vector<Rational>> cross(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) diag[i] = norm(basis_elem(i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QElem s = elem_add(basis_elem(i), basis_elem(j));
      cross[i][j] = norm(s) - diag[i] - diag[j];
    }
  std::vector<int> c(d, -2);
  std::optional<QElem> first_isotropic;
  while (true) {
    bool all_zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    if (!all_zero) {
      Rational n(0);
      for (int i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        n += diag[i] * (c[i] * c[i]);
        for (int j = i + 1; j < d; ++j)
          if (c[j] != 0 && cross[i][j] != 0) n += cross[i][j] * (c[i] * c[j]);
      }
      if (n == 0) {
        QElem x = zero();
        for (int i = 0; i < d; ++i) x.coords[i] = c[i];
        if (norm(x) != 0) throw InternalError("norm form disagrees with direct norm");
        if (!first_isotropic) first_isotropic = x;
        Rational t = trace(x);
        if (t != 0) {
          QElem idem = elem_scale(x, Rational(1) / t);
          if (!(multiply(idem, idem) == idem))
            throw InternalError("x/t(x) failed to be idempotent for isotropic x");
          return ZeroDivisorWitness{*first_isotropic, idem};
        }
      }
    }
    int k = 0;
    while (k < d && c[k] == 2) c[k++] = -2;
    if (k == d) break;
    ++c[k];
  }
  return std::nullopt;
}

}  // namespace octgi

#include "octgi/sympoly.hpp"

#include <algorithm>

namespace octgi {

SymPoly SymPoly::constant(const Rational& c) {
  SymPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

SymPoly SymPoly::variable(int id) {
  SymPoly p;
  p.terms_[{{id, 1}}] = 1;
  return p;
}

void SymPoly::add_term(const Mono& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  r += o;
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  SymPoly r = *this;
  r -= o;
  return r;
}

SymPoly SymPoly::operator-() const {
  SymPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {

SymPoly::Mono mono_mul(const SymPoly::Mono& a, const SymPoly::Mono& b) {
  SymPoly::Mono out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

SymPoly SymPoly::operator*(const Rational& c) const {
  if (c == 0) return SymPoly();
  SymPoly r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += rat_str(c);
    for (const auto& [v, e] : m) {
      s += "*c" + std::to_string(v);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace octgi

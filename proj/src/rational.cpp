#include "octgi/rational.hpp"

#include <cctype>

#include "octgi/error.hpp"

namespace octgi {

Rational rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw DomainError("malformed rational literal '" + text + "'");
    return text.substr(start, j - start);
  };
  std::string num = digits(i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits(i);
  }
  if (i != text.size()) throw DomainError("malformed rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw DomainError("rational with zero denominator '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace octgi

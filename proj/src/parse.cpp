#include "octgi/parse.hpp"

#include <cctype>

namespace octgi {

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    // lone zero literal
    if (text_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return Poly::zero();
      pos_ = save;
    }
    Poly acc = Poly::zero();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
      skip_ws();
    } else if (peek() == '+') {
      ++pos_;
      skip_ws();
    }
    acc = acc + parse_monomial(negate);
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c == '*')
        throw ParseError("product is nonassociative: parenthesize every '*'", pos_);
      if (c != '+' && c != '-')
        throw ParseError("expected '+' or '-' between monomials", pos_);
      ++pos_;
      skip_ws();
      acc = acc + parse_monomial(c == '-');
      skip_ws();
    }
    return acc;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Poly parse_monomial(bool negate) {
    Rational coeff(1);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      skip_ws();
      if (!at_end() && peek() == '*') {
        // optional '*' between coefficient and factor
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'x' && peek() != '(')) pos_ = save;
      }
      skip_ws();
    }
    Term t = parse_factor();
    if (negate) coeff = -coeff;
    return Poly::monomial(coeff, t);
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    std::string num = parse_digits("coefficient");
    std::string den;
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = parse_digits("denominator");
    }
    mpz_class n(num), d(den.empty() ? "1" : den);
    if (d == 0) throw ParseError("zero denominator in coefficient", start);
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  std::string parse_digits(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected digits in ") + what, pos_);
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Term parse_factor() {
    skip_ws();
    if (at_end()) throw ParseError("expected variable or '('", pos_);
    if (peek() == 'x') return parse_var();
    if (peek() == '(') {
      std::size_t open = pos_;
      ++pos_;
      Term l = parse_factor();
      skip_ws();
      if (at_end() || peek() != '*')
        throw ParseError("expected '*' inside product (products are binary)", pos_);
      ++pos_;
      Term r = parse_factor();
      skip_ws();
      if (!at_end() && peek() == '*')
        throw ParseError("product is nonassociative: parenthesize every '*'", pos_);
      if (at_end() || peek() != ')')
        throw ParseError("unclosed '(' in product", open);
      ++pos_;
      return Term::mul(l, r);
    }
    throw ParseError("expected variable or '('", pos_);
  }

  Term parse_var() {
    ++pos_;  // past 'x'
    std::string id = parse_digits("variable index");
    if (at_end() || peek() != ':')
      throw ParseError("variable is missing its grade (write x" + id + ":(...) )", pos_);
    ++pos_;
    GroupElem g = GroupElem::parse(text_, pos_);
    if (rank_ == 0)
      rank_ = g.rank();
    else if (rank_ != g.rank())
      throw ParseError("mixed group ranks in one expression", pos_);
    return Term::leaf(GradedVar{std::stoi(id), g});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int rank_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

std::string format_term(const Term& t) { return t.str(); }

namespace {

std::string monomial_str(const Rational& c, const Term& t, bool leading) {
  std::string s;
  Rational a = abs(c);
  if (leading) {
    if (c < 0) s += "-";
  }
  if (a != 1) s += rat_str(a) + " ";
  s += t.str();
  return s;
}

}  // namespace

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, t] : f.monomials()) {
    if (first) {
      s += monomial_str(c, t, true);
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
      s += monomial_str(c, t, false);
    }
  }
  return s;
}

std::string format_poly_lines(const Poly& f) {
  if (f.is_zero()) return "0\n";
  std::string s;
  bool first = true;
  for (const auto& [c, t] : f.monomials()) {
    if (first) {
      s += monomial_str(c, t, true);
      first = false;
    } else {
      s += "\n";
      s += c < 0 ? "- " : "+ ";
      s += monomial_str(c, t, false);
    }
  }
  s += "\n";
  return s;
}

}  // namespace octgi

#pragma once

#include <string>

#include "octgi/freealg.hpp"

namespace octgi {

/// Parses the expression grammar:
///   poly   := term (('+'|'-') term)* | '0'
///   term   := [rational] factor
///   factor := var | '(' factor '*' factor ')'
///   var    := 'x' digits ':' '(' bit (',' bit)* ')'
/// '*' is binary and parentheses are mandatory around every product; the
/// product is nonassociative so nothing is left to precedence. Coefficients
/// are integers or p/q. Throws ParseError with a byte offset.
Poly parse_poly(const std::string& text);

/// Canonical single-line rendering; parse(format(f)) == f.
std::string format_poly(const Poly& f);

/// One monomial per line, in canonical order; reparses to an equal Poly.
std::string format_poly_lines(const Poly& f);

std::string format_term(const Term& t);

}  // namespace octgi

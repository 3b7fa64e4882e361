#pragma once

#include <gmpxx.h>

#include <string>

namespace octgi {

// Exact rational scalars. GMP-backed so elimination and norm computations
// never overflow; everything downstream assumes arithmetic is exact.
using Rational = mpq_class;

/// Canonicalized rational from a numerator/denominator pair.
Rational rat(long num, long den = 1);

/// Parses "p" or "p/q" with optional leading '-'. Throws DomainError on a
/// malformed literal or zero denominator.
Rational rat_parse(const std::string& text);

std::string rat_str(const Rational& r);

}  // namespace octgi

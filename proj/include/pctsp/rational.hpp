#ifndef PCTSP_RATIONAL_HPP
#define PCTSP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pctsp {

/// Exact rational scalar used by every combinatorial stage.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal ("0.125", "-3e-2") exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational rational_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Closest rational convergent of (3 - sqrt 5)/2 with error below 1e-30.
Rational golden_delta();

}  // namespace pctsp

#endif  // PCTSP_RATIONAL_HPP

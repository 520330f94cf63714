#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rigidity {

// Exact arbitrary-precision rational backed by GMP.
using Rational = mpq_class;

/// Canonicalized num/den; den must be non-zero.
Rational make_rational(long num, long den);

/// Parses "p", "p/q" or a finite decimal such as "-0.125" into a canonical
/// rational. Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders "p/q" (integers as "p/1") so the wire format is uniform.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

}  // namespace rigidity

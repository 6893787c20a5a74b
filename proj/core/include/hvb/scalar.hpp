#pragma once

// Exact rational coefficients. Everything in the library is computed over Q;
// gmpxx keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hvb {

using Scalar = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error if den == 0.
Scalar make_scalar(long num, long den = 1);

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace hvb

#pragma once

#include <gmpxx.h>

#include <string>

namespace gct {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" form, always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts "a", "a/b" (b != 0); result is canonicalized.
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer binomial(long n, long k);

}  // namespace gct

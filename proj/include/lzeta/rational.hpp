#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lzeta {

/// Exact rational in canonical form (gcd 1, positive denominator).
/// gmpxx keeps arithmetic results canonical; `make_rational` and `parse_rational`
/// canonicalize anything built from raw numerator/denominator pairs.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "a" or "a/b" (also accepts leading '+'/'-').
Rational parse_rational(std::string_view text);
/// "-296/355", "24", "0".
std::string to_string(const Rational& q);

/// 2^e for any integer e.
Rational pow2(long e);
/// base^e, e may be negative (base != 0 then).
Rational pow(const Rational& base, long e);
Rational factorial(unsigned long n);

}  // namespace lzeta

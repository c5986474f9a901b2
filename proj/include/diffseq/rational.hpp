#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diffseq {

using Integer = mpz_class;
/// Arbitrary precision rational; mpq_class keeps gcd(num, den) = 1 and
/// den > 0 after canonicalize().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view s);

Rational factorial(int n);
/// C(n, k); zero outside 0 <= k <= n.
Rational binomial(int n, int k);
/// Integer power; negative exponents require q != 0.
Rational power(const Rational& q, int e);

}  // namespace diffseq

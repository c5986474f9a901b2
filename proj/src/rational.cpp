#include "diffseq/rational.hpp"

#include <cctype>

#include "diffseq/errors.hpp"

namespace diffseq {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::size_t end = digits(i);
  if (end == i) throw ParseError("expected digits", i, {"digit"});
  Integer num(std::string(s.substr(i, end - i)));
  if (negative) num = -num;
  Integer den = 1;
  if (end < s.size()) {
    if (s[end] != '/') throw ParseError("unexpected character", end, {"/"});
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart) throw ParseError("expected digits", dstart, {"digit"});
    if (dend != s.size()) throw ParseError("trailing characters", dend);
    den = Integer(std::string(s.substr(dstart, dend - dstart)));
    if (den == 0) throw ParseError("zero denominator", dstart);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(c);
}

Rational power(const Rational& q, int e) {
  if (e < 0) {
    if (q == 0) throw InvalidArgument("zero to a negative power");
    Rational inv = 1 / q;
    return power(inv, -e);
  }
  Rational result(1);
  Rational base(q);
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) result *= base;
    u >>= 1u;
    if (u) base *= base;
  }
  return result;
}

}  // namespace diffseq

#pragma once

#include <gmpxx.h>

#include <string>

#include "parkfn/errors.hpp"

namespace parkfn {

using Integer = mpz_class;
using Rational = mpq_class;

// base^exp with the 0^0 = 1 convention used throughout the counting formulas.
inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(long base, long exp) {
  if (exp < 0) throw InvalidInput("ipow: negative exponent");
  return ipow(Integer(base), static_cast<unsigned long>(exp));
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k); zero whenever k < 0, n < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// num/den in canonical reduced form (gcd 1, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PoleError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// r^exp in exact arithmetic. Negative exponents invert, 0^0 = 1, and a zero
// base with a negative exponent is a pole.
inline Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw PoleError("rational_pow: zero base with negative exponent");
    return Rational(0);
  }
  bool invert = exp < 0;
  unsigned long e =
      invert ? 0UL - static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
  Integer num = ipow(Integer(base.get_num()), e);
  Integer den = ipow(Integer(base.get_den()), e);
  return invert ? make_rational(den, num) : make_rational(num, den);
}

// mpz_class has no long long constructor; go through the decimal string.
inline Integer to_integer(long long v) { return Integer(std::to_string(v)); }

// Exact conversion; a surviving denominator signals an internal error.
inline Integer to_integer(const Rational& r, const char* what = "value") {
  if (r.get_den() != 1)
    throw ConsistencyError(std::string(what) + " is not an integer: " + r.get_str());
  return Integer(r.get_num());
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Parses "a/b" or "a" with optional sign.
inline Rational rational_parse(const std::string& text) {
  try {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const PoleError&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse rational \"" + text + "\"");
  }
}

}  // namespace parkfn

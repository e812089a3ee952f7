#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkfn/genfun.hpp"
#include "parkfn/rng.hpp"
#include "test_util.hpp"

using namespace parkfn;

namespace {

UniPoly random_poly(SplitMix64& rng) {
  int degree = static_cast<int>(bounded(rng, 6));
  std::vector<Integer> coeffs(degree + 1);
  for (Integer& c : coeffs) c = static_cast<long>(bounded(rng, 21)) - 10;
  return UniPoly(std::move(coeffs));
}

// Rational with small numerator and denominator, avoiding integers in
// [-(n+2), 1] so shifted bases can never vanish under a negative exponent.
Rational random_abel_rational(SplitMix64& rng, int n) {
  for (;;) {
    long num = static_cast<long>(bounded(rng, 19)) - 9;
    long den = static_cast<long>(bounded(rng, 9)) + 1;
    Rational r = make_rational(num, den);
    if (r.get_den() == 1) {
      long v = static_cast<long>(r.get_num().get_si());
      if (v >= -(n + 2) && v <= 1) continue;
    }
    return r;
  }
}

}  // namespace

TEST_CASE("polynomial canonical form and arithmetic") {
  UniPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(UniPoly({0, 0, 0}).is_zero());
  CHECK(UniPoly({1, 2, 0}).degree() == 1);

  UniPoly p({1, 2});   // 2q + 1
  UniPoly q({-1, 1});  // q - 1
  CHECK(p * q == UniPoly({-1, -1, 2}));
  CHECK(p + q == UniPoly({0, 3}));
  CHECK(p - p == zero);
  CHECK(p.pow(0) == UniPoly({1}));
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("polynomial ring laws on random inputs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).value_at_one() == a.value_at_one() * b.value_at_one());
  }
}

TEST_CASE("bivariate polynomial arithmetic") {
  BiPoly lin = BiPoly::linear(1, 1, 1);  // q + t + 1
  BiPoly sq = lin.pow(2);
  CHECK(sq.coeff(2, 0) == 1);
  CHECK(sq.coeff(1, 1) == 2);
  CHECK(sq.coeff(0, 0) == 1);
  CHECK(sq.coeff(1, 0) == 2);
  CHECK(sq.value_at_one() == 9);
  // t := 1 collapses q + t + 1 to q + 2
  CHECK(lin.substitute_t(1) == UniPoly({2, 1}));
  BiPoly zero_term = BiPoly::linear(0, 0, 0);
  CHECK(zero_term.is_zero());
}

TEST_CASE("displacement enumerator by enumeration") {
  CHECK(displacement_enumerator_brute(1) == UniPoly({1}));
  CHECK(displacement_enumerator_brute(2) == UniPoly({0, 1}));
  CHECK(displacement_enumerator_brute(3) == UniPoly({0, 0, 3, 1}));
  CHECK(displacement_enumerator_brute(4).value_at_one() == 27);
}

TEST_CASE("displacement enumerator from weighted paths") {
  CHECK(displacement_enumerator_paths(2) == UniPoly({0, 1}));
  CHECK(displacement_enumerator_paths(3) == UniPoly({0, 0, 3, 1}));
  CHECK(displacement_enumerator_prime_paths(2) == UniPoly({0, 1}));
  CHECK(displacement_enumerator_prime_paths(3) == UniPoly({0, 0, 3, 1}));
  for (int len = 2; len <= 6; ++len) {
    UniPoly brute = displacement_enumerator_brute(len);
    CHECK(displacement_enumerator_paths(len) == brute);
    CHECK(displacement_enumerator_prime_paths(len) == brute);
  }
  CHECK_THROWS_AS(displacement_enumerator_paths(1), InvalidInput);
}

TEST_CASE("residue-count generating function") {
  CHECK(ell_genfun(3, 0) == UniPoly({1, 2, 1}));
  CHECK(ell_genfun(2, 0) == UniPoly({0, 1}));
  CHECK(ell_genfun_closed(4) == UniPoly({8, 12, 6, 1}));
  for (int n = 2; n <= 5; ++n)
    for (int ell = 0; ell <= n - 2; ++ell) CHECK(ell_genfun(n, ell) == ell_genfun_closed(n));
  CHECK_THROWS_AS(ell_genfun(4, 3), InvalidInput);
  CHECK_THROWS_AS(ell_genfun(1, 0), InvalidInput);
}

TEST_CASE("joint residue-count generating function") {
  BiPoly expected;  // (q + t)^2
  expected.add_term(2, 0, 1);
  expected.add_term(1, 1, 2);
  expected.add_term(0, 2, 1);
  CHECK(mixed_genfun(3, 0, 1) == expected);

  CHECK(mixed_genfun_closed(4).value_at_one() == 27);
  for (int n = 3; n <= 5; ++n)
    for (int ell = 0; ell <= n - 2; ++ell)
      for (int m = 0; m <= n - 2; ++m) {
        if (ell == m) continue;
        CHECK(mixed_genfun(n, ell, m) == mixed_genfun_closed(n));
      }

  // specializing t := 1 recovers the single-residue closed form
  for (int n = 3; n <= 6; ++n)
    CHECK(mixed_genfun_closed(n).substitute_t(1) == ell_genfun_closed(n));

  CHECK_THROWS_AS(mixed_genfun(2, 0, 0), InvalidInput);
  CHECK_THROWS_AS(mixed_genfun(4, 1, 1), InvalidInput);
}

TEST_CASE("Abel sum values") {
  CHECK(abel_sum(2, 1, 1, -1, 0) == 16);
  for (int n = 1; n <= 10; ++n)
    CHECK(abel_sum(n, 1, -1, -1, 0) == Rational(ipow(n, n)));

  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Rational x = random_abel_rational(rng, 0);
    Rational y = random_abel_rational(rng, 0);
    long p = static_cast<long>(bounded(rng, 5)) - 2;
    long q = static_cast<long>(bounded(rng, 5)) - 2;
    CHECK(abel_sum(0, x, y, p, q) == rational_pow(x, p) * rational_pow(y, q));
  }

  CHECK_THROWS_AS(abel_sum(2, 0, 1, -1, 0), PoleError);
}

TEST_CASE("Abel recurrences and special cases on random rationals") {
  SplitMix64 rng(1234);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      Rational x = random_abel_rational(rng, n);
      Rational y = random_abel_rational(rng, n);
      long p = static_cast<long>(bounded(rng, 3)) - 1;
      long q = static_cast<long>(bounded(rng, 3)) - 1;
      CHECK(abel_check_split(n, x, y, p, q));
      CHECK(abel_check_convolution(n, x, y, p, q));
      CHECK(abel_check_power_identity(n, x, y));
      CHECK(abel_check_factorial_identity(n, x, y));
    }
  }
  CHECK_THROWS_AS(abel_check_power_identity(3, 0, 1), PoleError);
}

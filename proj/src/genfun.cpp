#include "parkfn/genfun.hpp"

#include "parkfn/lukas.hpp"

namespace parkfn {

UniPoly displacement_enumerator_brute(int ppf_len, int limit) {
  UniPoly out;
  for_each_ppf(
      ppf_len,
      [&](const std::vector<int>& a) {
        out.add_at(static_cast<int>(detail::displacement_entries(a)), 1);
      },
      limit);
  return out;
}

UniPoly displacement_enumerator_paths(int ppf_len, int limit) {
  if (ppf_len < 2) throw InvalidInput("displacement_enumerator_paths requires length >= 2");
  int n = ppf_len - 1;
  RatUniPoly acc;
  for_each_lukas(
      n,
      [&](const std::vector<int>& steps) {
        long long path_area = 0;
        long long h = 0;
        Integer weight_den = steps[0] + 2;
        for (int s : steps) {
          h += s;
          path_area += h;
          weight_den *= factorial(s + 1);
        }
        // degree shift by n comes from the leading q^n factor
        acc.add_at(static_cast<int>(path_area) + n, make_rational(1, weight_den));
      },
      limit);
  return integer_poly(acc * Rational(factorial(n + 1)));
}

UniPoly displacement_enumerator_prime_paths(int ppf_len, int limit) {
  if (ppf_len < 2)
    throw InvalidInput("displacement_enumerator_prime_paths requires length >= 2");
  RatUniPoly acc;
  for_each_prime_lukas(
      ppf_len,
      [&](const std::vector<int>& steps) {
        long long path_area = 0;
        long long h = 0;
        Integer weight_den = 1;
        for (int s : steps) {
          h += s;
          path_area += h;
          weight_den *= factorial(s + 1);
        }
        acc.add_at(static_cast<int>(path_area), make_rational(1, weight_den));
      },
      limit);
  return integer_poly(acc * Rational(factorial(ppf_len)));
}

UniPoly ell_genfun(int n, int ell, int limit) {
  if (n < 2) throw InvalidInput("ell_genfun requires n >= 2");
  if (ell < 0 || ell > n - 2) throw InvalidInput("ell_genfun: residue out of range");
  UniPoly out;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        int count = 0;
        for (int r : detail::forward_residues(a))
          if (r == ell) ++count;
        out.add_at(count, 1);
      },
      limit);
  return out;
}

UniPoly ell_genfun_closed(int n) {
  if (n < 2) throw InvalidInput("ell_genfun_closed requires n >= 2");
  return UniPoly({Integer(n - 2), Integer(1)}).pow(n - 1);
}

BiPoly mixed_genfun(int n, int ell, int m, int limit) {
  if (n < 3) throw InvalidInput("mixed_genfun requires n >= 3");
  if (ell < 0 || ell > n - 2 || m < 0 || m > n - 2)
    throw InvalidInput("mixed_genfun: residue out of range");
  if (ell == m) throw InvalidInput("mixed_genfun: residues must differ");
  BiPoly out;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        int cq = 0, ct = 0;
        for (int r : detail::forward_residues(a)) {
          if (r == ell) ++cq;
          if (r == m) ++ct;
        }
        out.add_term(cq, ct, 1);
      },
      limit);
  return out;
}

BiPoly mixed_genfun_closed(int n) {
  if (n < 3) throw InvalidInput("mixed_genfun_closed requires n >= 3");
  return BiPoly::linear(1, 1, n - 3).pow(n - 1);
}

Rational abel_sum(int n, const Rational& x, const Rational& y, long p, long q) {
  if (n < 0) throw InvalidInput("abel_sum requires n >= 0");
  Rational total(0);
  for (int s = 0; s <= n; ++s) {
    Rational left = rational_pow(x + s, s + p);
    Rational right = rational_pow(y + (n - s), (n - s) + q);
    total += Rational(binomial(n, s)) * left * right;
  }
  return total;
}

bool abel_check_split(int n, const Rational& x, const Rational& y, long p, long q) {
  if (n < 1) throw InvalidInput("abel_check_split requires n >= 1");
  return abel_sum(n, x, y, p, q) ==
         abel_sum(n - 1, x, y + 1, p, q + 1) + abel_sum(n - 1, x + 1, y, p + 1, q);
}

bool abel_check_convolution(int n, const Rational& x, const Rational& y, long p, long q) {
  if (n < 0) throw InvalidInput("abel_check_convolution requires n >= 0");
  Rational rhs(0);
  for (int s = 0; s <= n; ++s)
    rhs += Rational(binomial(n, s) * factorial(s)) * (x + s) *
           abel_sum(n - s, x + s, y, p - 1, q);
  return abel_sum(n, x, y, p, q) == rhs;
}

bool abel_check_power_identity(int n, const Rational& x, const Rational& y) {
  if (x == 0) throw PoleError("abel_check_power_identity: x must be nonzero");
  Rational rhs = rational_pow(x, -1) * rational_pow(x + y + n, n);
  return abel_sum(n, x, y, -1, 0) == rhs;
}

bool abel_check_factorial_identity(int n, const Rational& x, const Rational& y) {
  if (x == 0) throw PoleError("abel_check_factorial_identity: x must be nonzero");
  Rational sum(0);
  for (int s = 0; s <= n; ++s)
    sum += Rational(binomial(n, s) * factorial(n - s)) * rational_pow(x + y + n, s) *
           (y + (n - s));
  return abel_sum(n, x, y, -1, 1) == rational_pow(x, -1) * sum;
}

}  // namespace parkfn

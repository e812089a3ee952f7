#pragma once

#include "parkfn/numbers.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/poly.hpp"

namespace parkfn {

// Sum of q^displacement over all prime parking functions of length ppf_len,
// by direct enumeration.
UniPoly displacement_enumerator_brute(int ppf_len, int limit = kDefaultEnumLimit);

// Same polynomial computed as a weighted sum over step words of length
// ppf_len - 1: (ppf_len)! q^(ppf_len-1) times, per word, the product of
// q^h_j / (h_j - h_{j-1} + 1)! over all steps, with an extra 1/(h_1 + 2)
// factor for the first step. Coefficients are accumulated exactly as
// rationals and must come out integral.
UniPoly displacement_enumerator_paths(int ppf_len, int limit = kDefaultEnumLimit);

// Variant summing over prime words of length ppf_len (interior heights >= 1)
// with weight (ppf_len)! times the product of q^h_j / (h_j - h_{j-1} + 1)!.
UniPoly displacement_enumerator_prime_paths(int ppf_len, int limit = kDefaultEnumLimit);

// Distribution of the number of positions with consecutive difference
// congruent to ell (mod n-1), over prime parking functions of length n.
UniPoly ell_genfun(int n, int ell, int limit = kDefaultEnumLimit);

// Closed form (q + n - 2)^(n-1); independent of the residue.
UniPoly ell_genfun_closed(int n);

// Joint distribution in q and t for two distinct residues ell and m.
BiPoly mixed_genfun(int n, int ell, int m, int limit = kDefaultEnumLimit);

// Closed form (q + t + n - 3)^(n-1).
BiPoly mixed_genfun_closed(int n);

// Abel sum A_n(x, y; p, q) = sum_{s=0}^n C(n,s) (x+s)^(s+p) (y+n-s)^(n-s+q)
// in exact rationals. Negative exponents are evaluated exactly; a zero base
// under a negative exponent raises PoleError.
Rational abel_sum(int n, const Rational& x, const Rational& y, long p, long q);

// A_n(x,y;p,q) == A_{n-1}(x,y+1;p,q+1) + A_{n-1}(x+1,y;p+1,q)
bool abel_check_split(int n, const Rational& x, const Rational& y, long p, long q);

// A_n(x,y;p,q) == sum_s C(n,s) s! (x+s) A_{n-s}(x+s,y;p-1,q)
bool abel_check_convolution(int n, const Rational& x, const Rational& y, long p, long q);

// A_n(x,y;-1,0) == (x+y+n)^n / x
bool abel_check_power_identity(int n, const Rational& x, const Rational& y);

// A_n(x,y;-1,1) == (1/x) sum_s C(n,s) (x+y+n)^s (y+n-s) (n-s)!
bool abel_check_factorial_identity(int n, const Rational& x, const Rational& y);

}  // namespace parkfn

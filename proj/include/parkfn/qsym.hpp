#pragma once

#include <map>
#include <vector>

#include "parkfn/numbers.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/poly.hpp"

namespace parkfn {

// Exponent vector over x_1..x_k, ordered lexicographically by the map below.
using Monomial = std::vector<int>;

// Multivariate polynomial in x_1..x_k whose coefficients are univariate
// polynomials in q; plain integer coefficients are degree-0 polynomials so
// one representation covers both kinds of identity. No zero coefficients are
// stored and term order is lexicographic on exponent vectors.
class MVPoly {
 public:
  MVPoly() = default;
  explicit MVPoly(int vars) : vars_(vars) {}

  int vars() const { return vars_; }
  const std::map<Monomial, UniPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& exps, const UniPoly& coeff);

  MVPoly& operator+=(const MVPoly& o);

  // Multiplies every coefficient by the given polynomial in q.
  MVPoly scaled(const UniPoly& factor) const;
  MVPoly scaled(const Integer& factor) const;

  // Substitutes a value for q, leaving constant coefficients.
  MVPoly substitute_q(const Integer& value) const;

  // Sets x_2 = ... = x_k = 0, keeping only pure powers of x_1.
  MVPoly restrict_first_var() const;

  // Relabels variables; perm[i] is the new (0-based) index of variable i.
  MVPoly permuted_vars(const std::vector<int>& perm) const;

  bool homogeneous_of_degree(int degree) const;

  friend bool operator==(const MVPoly&, const MVPoly&) = default;

 private:
  int vars_ = 0;
  std::map<Monomial, UniPoly> terms_;
};

// Gessel's fundamental quasisymmetric function F_{n,S} truncated to k
// variables: the sum of x_{b_1}...x_{b_n} over weakly increasing chains
// 1 <= b_1 <= ... <= b_n <= k that rise strictly after each position in S.
MVPoly fundamental_qsym(int n, const std::vector<int>& strict_positions, int k);

// Hook Schur polynomial s_(i,1^(n-i)) in k variables, computed two ways:
// the F-expansion over all strict-position sets of size n-i, and direct
// enumeration of column-strict hook tableaux. The two must agree.
MVPoly schur_hook(int i, int n, int k);

struct QuasisymCheck {
  MVPoly lhs;
  MVPoly rhs;
  bool equal = false;
};

// Compares the tie-set sum of F_{n,Tie} over prime parking functions of
// length n against sum_i (n-2)^(i-1) s_(i,1^(n-i)), in k variables.
QuasisymCheck verify_quasisym(int n, int k, int limit = kDefaultEnumLimit);

struct QuasisymCorrCheck {
  bool eq1 = false;  // same-residue identity
  bool eq2 = false;  // mixed-residue identity
  MVPoly lhs1, rhs1, lhs2, rhs2;
};

// Refined identities with q marking the residue-ell count: the F-index uses
// residue ell on the first identity and a different residue m on the second.
QuasisymCorrCheck verify_quasisym_corr(int n, int ell, int m, int k,
                                       int limit = kDefaultEnumLimit);

}  // namespace parkfn

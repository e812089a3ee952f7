#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "parkfn/qsym.hpp"
#include "parkfn/rng.hpp"

using namespace parkfn;

namespace {

MVPoly from_terms(int k, const std::vector<std::pair<Monomial, long>>& terms) {
  MVPoly p(k);
  for (const auto& [exps, c] : terms) p.add(exps, UniPoly::constant(Integer(c)));
  return p;
}

}  // namespace

TEST_CASE("fundamental quasisymmetric polynomials") {
  CHECK(fundamental_qsym(3, {1, 2}, 3) == from_terms(3, {{{1, 1, 1}, 1}}));

  MVPoly f31 = from_terms(3, {{{1, 2, 0}, 1}, {{1, 0, 2}, 1}, {{0, 1, 2}, 1}, {{1, 1, 1}, 1}});
  CHECK(fundamental_qsym(3, {1}, 3) == f31);

  for (int n = 1; n <= 5; ++n)
    CHECK(fundamental_qsym(n, {}, 1) == from_terms(1, {{{n}, 1}}));

  // full strictness with too few variables leaves nothing
  CHECK(fundamental_qsym(3, {1, 2}, 2).is_zero());

  CHECK_THROWS_AS(fundamental_qsym(3, {3}, 3), InvalidInput);
  CHECK_THROWS_AS(fundamental_qsym(3, {1}, 0), InvalidInput);
}

TEST_CASE("hook Schur polynomials match the worked fillings") {
  MVPoly s21 = from_terms(3, {{{2, 1, 0}, 1},
                              {{2, 0, 1}, 1},
                              {{1, 2, 0}, 1},
                              {{1, 1, 1}, 2},
                              {{1, 0, 2}, 1},
                              {{0, 2, 1}, 1},
                              {{0, 1, 2}, 1}});
  CHECK(schur_hook(2, 3, 3) == s21);

  CHECK(schur_hook(1, 3, 3) == from_terms(3, {{{1, 1, 1}, 1}}));

  MVPoly s3 = schur_hook(3, 3, 3);
  CHECK(s3.terms().size() == 10);
  CHECK(s3.homogeneous_of_degree(3));

  CHECK_THROWS_AS(schur_hook(0, 3, 3), InvalidInput);
  CHECK_THROWS_AS(schur_hook(4, 3, 3), InvalidInput);
}

TEST_CASE("schur polynomials are symmetric and homogeneous") {
  SplitMix64 rng(321);
  for (int n = 2; n <= 5; ++n) {
    int k = n;
    for (int i = 1; i <= n; ++i) {
      MVPoly hook = schur_hook(i, n, k);
      CHECK(hook.homogeneous_of_degree(n));
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        int a = static_cast<int>(bounded(rng, k));
        int b = static_cast<int>(bounded(rng, k));
        std::swap(perm[a], perm[b]);
        CHECK(hook.permuted_vars(perm) == hook);
      }
    }
  }
}

TEST_CASE("both hook computations agree across all shapes and variable counts") {
  // schur_hook raises internally if the expansion and tableau routes differ
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int i = 1; i <= n; ++i) CHECK_NOTHROW((void)schur_hook(i, n, k));
}

TEST_CASE("quasisymmetric polynomials are homogeneous but not symmetric in general") {
  MVPoly f = fundamental_qsym(4, {2}, 4);
  CHECK(f.homogeneous_of_degree(4));
  std::vector<int> swap_first{1, 0, 2, 3};
  CHECK_FALSE(f.permuted_vars(swap_first) == f);
}

TEST_CASE("tie-set identity reproduces the worked expansion") {
  QuasisymCheck check = verify_quasisym(3, 3);
  CHECK(check.equal);
  MVPoly expected = from_terms(3, {{{3, 0, 0}, 1},
                                   {{0, 3, 0}, 1},
                                   {{0, 0, 3}, 1},
                                   {{2, 1, 0}, 2},
                                   {{1, 2, 0}, 2},
                                   {{2, 0, 1}, 2},
                                   {{1, 0, 2}, 2},
                                   {{0, 2, 1}, 2},
                                   {{0, 1, 2}, 2},
                                   {{1, 1, 1}, 4}});
  CHECK(check.lhs == expected);
  CHECK(check.rhs == expected);
}

TEST_CASE("tie-set identity in small cases") {
  QuasisymCheck two = verify_quasisym(2, 2);
  CHECK(two.equal);
  CHECK(two.lhs == from_terms(2, {{{1, 1}, 1}}));

  for (int n = 2; n <= 5; ++n) CHECK(verify_quasisym(n, n).equal);
}

TEST_CASE("restricting to one variable recovers the empty-tie-set count") {
  for (int n = 4; n <= 5; ++n) {
    QuasisymCheck check = verify_quasisym(n, n);
    MVPoly lhs_restricted = check.lhs.restrict_first_var();
    CHECK(lhs_restricted == check.rhs.restrict_first_var());
    Monomial pure(n, 0);
    pure[0] = n;
    REQUIRE(lhs_restricted.terms().count(pure) == 1);
    CHECK(lhs_restricted.terms().at(pure) == UniPoly::constant(ipow(n - 2, n - 1)));
  }
}

TEST_CASE("refined identities with the q statistic") {
  QuasisymCorrCheck three = verify_quasisym_corr(3, 0, 1, 3);
  CHECK(three.eq1);
  CHECK(three.eq2);

  for (int n = 3; n <= 4; ++n)
    for (int ell = 0; ell <= n - 2; ++ell)
      for (int m = 0; m <= n - 2; ++m) {
        if (ell == m) continue;
        QuasisymCorrCheck check = verify_quasisym_corr(n, ell, m, n);
        CHECK(check.eq1);
        CHECK(check.eq2);
      }

  CHECK_THROWS_AS(verify_quasisym_corr(2, 0, 0, 2), InvalidInput);
  CHECK_THROWS_AS(verify_quasisym_corr(4, 1, 1, 4), InvalidInput);
}

TEST_CASE("setting q to one collapses the refined identity to the tie-set identity") {
  for (int n = 3; n <= 5; ++n) {
    QuasisymCorrCheck refined = verify_quasisym_corr(n, 0, 1, n);
    QuasisymCheck plain = verify_quasisym(n, n);
    CHECK(refined.lhs1.substitute_q(1) == plain.lhs);
    CHECK(refined.rhs1.substitute_q(1) == plain.rhs);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "parkfn/expectation.hpp"
#include "test_util.hpp"

using namespace parkfn;

TEST_CASE("poisson factor") {
  CHECK(poisson_factor(1) == doctest::Approx(2.0));
  CHECK(poisson_factor_exact(2) == make_rational(5, 2));
  CHECK(poisson_factor(2) == doctest::Approx(2.5));
  for (int n = 1; n <= 20; ++n) {
    double exact = poisson_factor_exact(n).get_d();
    CHECK(std::abs(poisson_factor(n) - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("expected first preference, exact") {
  CHECK(expected_pi1_exact(2) == make_rational(5, 4));
  CHECK(expected_pi1_exact(3) == make_rational(14, 9));
  CHECK(expected_pi1_exact(1) == 1);
  CHECK_THROWS_AS(expected_pi1_exact(0), InvalidInput);
  CHECK_THROWS_AS(expected_pi1_exact(300), LimitExceeded);
  CHECK_NOTHROW(expected_pi1_exact(300, 400));
}

TEST_CASE("exact expectation equals the enumeration average") {
  for (int n = 1; n <= 7; ++n) {
    long long total = 0, sum = 0;
    for_each_ppf(n + 1, [&](const std::vector<int>& a) {
      ++total;
      sum += a[0];
    });
    CHECK(expected_pi1_exact(n) == make_rational(to_integer(sum), to_integer(total)));
  }
}

TEST_CASE("asymptotic expansion of the expectation") {
  auto error_at = [](int n) {
    return std::abs(expected_pi1_value(n) - expected_pi1_asymptotic(n));
  };
  CHECK(error_at(100) > error_at(1000));
  CHECK(error_at(1000) > error_at(10000));
  CHECK(error_at(10000) < 0.05);

  // the float path tracks the exact rational where both are available
  for (int n = 1; n <= 50; ++n)
    CHECK(expected_pi1_value(n) ==
          doctest::Approx(expected_pi1_exact(n).get_d()).epsilon(1e-12));
}

TEST_CASE("expected displacement") {
  CHECK(expected_displacement_exact(2) == make_rational(9, 4));
  for (int n = 1; n <= 5; ++n) {
    long long total = 0, sum = 0;
    for_each_ppf(n + 1, [&](const std::vector<int>& a) {
      ++total;
      sum += detail::displacement_entries(a);
    });
    CHECK(expected_displacement_exact(n) == make_rational(to_integer(sum), to_integer(total)));
  }
  double exact = expected_displacement_value(10000);
  CHECK(std::abs(expected_displacement_asymptotic(10000) - exact) < 0.02 * exact);
}

TEST_CASE("difference vector and its inverse") {
  CHECK(l_map(PrefVector({1, 2, 2, 1})) == DiffVector({1, 0, 2}));
  CHECK_THROWS_AS(l_map(PrefVector({1, 2, 3})), InvalidInput);  // not prime
  CHECK_THROWS_AS(l_map(PrefVector({1})), InvalidInput);
  CHECK_THROWS_AS(DiffVector({0, 3, 0}), InvalidInput);  // residue out of range

  CHECK(unique_rotation({2, 3, 3, 2}) == PrefVector({1, 2, 2, 1}));
  CHECK_THROWS_AS(unique_rotation({1, 4, 1, 1}), InvalidInput);  // entry beyond n-1

  CHECK(l_inverse(DiffVector({1, 0, 2})) == PrefVector({1, 2, 2, 1}));
}

TEST_CASE("difference map is a bijection") {
  for (int n = 2; n <= 5; ++n) {
    // forward then back over all prime parking functions
    for_each_ppf(n, [&](const std::vector<int>& a) {
      PrefVector p(a);
      CHECK(l_inverse(l_map(p)) == p);
    });
    // back then forward over all residue vectors
    std::set<std::vector<int>> images;
    testutil::for_each_tuple(n - 1, n - 1, [&](const std::vector<int>& shifted) {
      std::vector<int> residues(shifted);
      for (int& r : residues) --r;  // tuples run 1..n-1, residues 0..n-2
      DiffVector d(residues);
      PrefVector p = l_inverse(d);
      CHECK(l_map(p) == d);
      images.insert(p.entries());
    });
    CHECK(Integer(images.size()) == count_ppf(n));
  }
}

TEST_CASE("every rotation tuple has exactly one valid shift") {
  for (int n = 2; n <= 6; ++n) {
    testutil::for_each_tuple(n, n - 1, [&](const std::vector<int>& pi0) {
      CHECK_NOTHROW((void)unique_rotation(pi0));
    });
  }
}

TEST_CASE("seeded sampling is deterministic and prime") {
  SampleConfig cfg{4, 64, 7};
  std::vector<PrefVector> first = kalikow_samples(cfg);
  std::vector<PrefVector> second = kalikow_samples(cfg);
  CHECK(first == second);
  for (const PrefVector& p : first) CHECK(is_prime_parking_function(p));

  cfg.seed = 8;
  CHECK(kalikow_samples(cfg) != first);

  SampleConfig tiny{2, 5, 123};
  for (const PrefVector& p : kalikow_samples(tiny)) CHECK(p == PrefVector({1, 1}));

  CHECK_THROWS_AS(kalikow_samples(SampleConfig{1, 5, 0}), InvalidInput);
}

TEST_CASE("bounded draws have unbiased residue marginals") {
  // chi-square over 9 residue classes, 10^6 draws; 5-sigma band for 8 dof
  SplitMix64 rng(31337);
  const int classes = 9;
  const long draws = 1000000;
  std::vector<long> counts(classes, 0);
  for (long i = 0; i < draws; ++i) ++counts[bounded(rng, classes)];
  double expected = static_cast<double>(draws) / classes;
  double chi2 = 0;
  for (long c : counts) chi2 += (c - expected) * (c - expected) / expected;
  double dof = classes - 1;
  CHECK(chi2 < dof + 5.0 * std::sqrt(2.0 * dof));
}

TEST_CASE("sampling through the difference map has the same uniform law") {
  // draw uniform residue vectors, map through l_inverse, chi-square against
  // the uniform distribution on the 27 objects of length 4
  std::map<std::vector<int>, int> index;
  int next = 0;
  for_each_ppf(4, [&](const std::vector<int>& a) { index[a] = next++; });
  REQUIRE(next == 27);

  SplitMix64 rng(5150);
  const long draws = 100000;
  std::vector<long> counts(27, 0);
  for (long i = 0; i < draws; ++i) {
    std::vector<int> residues(3);
    for (int& r : residues) r = static_cast<int>(bounded(rng, 3));
    ++counts[index.at(l_inverse(DiffVector(residues)).entries())];
  }
  double expected = static_cast<double>(draws) / 27;
  double chi2 = 0;
  for (long c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 26.0 + 5.0 * std::sqrt(52.0));
}

TEST_CASE("enumerated statistic averages") {
  ExpectedStats three = expected_stats_exact(3);
  CHECK(three.ties == 1);
  CHECK(three.descents == make_rational(1, 2));
  CHECK(three.ascents == make_rational(1, 2));

  ExpectedStats two = expected_stats_exact(2);
  CHECK(two.ties == 1);
  CHECK(two.descents == 0);
  CHECK(two.ascents == 0);

  ExpectedStats seven = expected_stats_exact(7);
  CHECK(seven.ties == 1);
  CHECK(seven.descents == make_rational(5, 2));
  CHECK(seven.ascents == make_rational(5, 2));
}

TEST_CASE("monte carlo report") {
  MonteCarloReport degenerate = monte_carlo_report({2, 100, 3});
  CHECK(degenerate.pi1.mean == 1.0);
  CHECK(degenerate.pi1.se == 0.0);
  CHECK(degenerate.displacement.mean == 1.0);
  CHECK(degenerate.ties.mean == 1.0);
  CHECK(degenerate.descents.mean == 0.0);

  MonteCarloReport r = monte_carlo_report({10, 20000, 11});
  REQUIRE(r.pi1.exact.has_value());
  double exact_pi1 = r.pi1.exact->get_d();
  CHECK(std::abs(r.pi1.mean - exact_pi1) < 5.0 * r.pi1.se);
  CHECK(std::abs(r.ties.mean - 1.0) < 5.0 * r.ties.se);
  CHECK(std::abs(r.descents.mean - 4.0) < 5.0 * r.descents.se);
  REQUIRE(r.displacement.exact.has_value());
  CHECK(std::abs(r.displacement.mean - r.displacement.exact->get_d()) <
        5.0 * r.displacement.se);
}

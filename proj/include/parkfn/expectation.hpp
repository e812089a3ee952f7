#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parkfn/numbers.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/rng.hpp"

namespace parkfn {

// Exact-rational evaluation is capped by default; larger arguments use the
// overflow-free float paths below.
inline constexpr int kDefaultExactLimit = 200;

// T(n) = (n!/n^n) * sum_{s=0}^n n^s/s!, evaluated as the backward product
// sum_{k=0}^n prod_{j=1}^k (n-j+1)/n so no factorial ever overflows.
double poisson_factor(int n);

// Same quantity as an exact rational.
Rational poisson_factor_exact(int n);

// E[pi_1] over prime parking functions of length n+1: (n + 3 - T(n)) / 2.
Rational expected_pi1_exact(int n, int exact_limit = kDefaultExactLimit);

// Stable float evaluation of the same closed form, valid for large n.
double expected_pi1_value(int n);

// Leading asymptotics (n - sqrt(pi n / 2) + 7/3) / 2.
double expected_pi1_asymptotic(int n);

// E[displacement] over prime parking functions of length n+1, via
// (n+1)(n+2)/2 - (n+1) E[pi_1].
Rational expected_displacement_exact(int n, int exact_limit = kDefaultExactLimit);
double expected_displacement_value(int n);

// Leading asymptotics sqrt(2 pi)/4 * n^(3/2) - n/6.
double expected_displacement_asymptotic(int n);

// Consecutive differences mod n-1 with canonical residues 0..n-2. For a
// sequence of length n the residue vector has length n-1, and the map is a
// bijection from prime parking functions of length n onto residue vectors.
class DiffVector {
 public:
  explicit DiffVector(std::vector<int> residues);

  const std::vector<int>& residues() const { return residues_; }
  int size() const { return static_cast<int>(residues_.size()); }
  int length_n() const { return size() + 1; }

  friend bool operator==(const DiffVector&, const DiffVector&) = default;

 private:
  std::vector<int> residues_;
};

DiffVector l_map(const PrefVector& p);
PrefVector l_inverse(const DiffVector& d);

// The circular rotation step: entries of pi0 live in 1..n-1, and exactly one
// shift i in 0..n-2 of pi0 + i(1,...,1) (mod n-1) is a prime parking
// function. Anything else raises ConsistencyError.
PrefVector unique_rotation(const std::vector<int>& pi0);

struct SampleConfig {
  int n = 2;
  long long samples = 1;
  std::uint64_t seed = 0;
};

// One uniform prime parking function of length n drawn from the given
// generator: a uniform residue tuple followed by the unique rotation.
PrefVector kalikow_sample_one(int n, SplitMix64& rng);

// Seeded uniform sampling; sample #i uses its own substream of the master
// seed, so the stream is reproducible and may be partitioned.
template <class Visit>
void kalikow_sample(const SampleConfig& cfg, Visit&& visit) {
  if (cfg.n < 2) throw InvalidInput("sampling requires n >= 2");
  if (cfg.samples < 1) throw InvalidInput("sampling requires at least one sample");
  for (long long i = 0; i < cfg.samples; ++i) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(i));
    visit(kalikow_sample_one(cfg.n, rng));
  }
}

std::vector<PrefVector> kalikow_samples(const SampleConfig& cfg);

struct ExpectedStats {
  Rational ties;
  Rational descents;
  Rational ascents;
};

// Enumeration averages over prime parking functions of length n. Also checks
// that every residue class has average count exactly 1, which the closed
// forms require.
ExpectedStats expected_stats_exact(int n, int limit = kDefaultEnumLimit);

struct MonteCarloStat {
  double mean = 0.0;
  double se = 0.0;
  std::optional<Rational> exact;
};

struct MonteCarloReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  MonteCarloStat pi1;
  MonteCarloStat displacement;
  MonteCarloStat ties;
  MonteCarloStat descents;
  MonteCarloStat ascents;
};

// Sample means and standard errors for the main statistics, with exact
// comparison columns where the closed forms are available.
MonteCarloReport monte_carlo_report(const SampleConfig& cfg);

}  // namespace parkfn

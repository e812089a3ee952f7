#include "parkfn/expectation.hpp"

#include <cmath>

namespace parkfn {

double poisson_factor(int n) {
  if (n < 1) throw InvalidInput("poisson_factor requires n >= 1");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= static_cast<double>(n - k + 1) / static_cast<double>(n);
    sum += term;
  }
  return sum;
}

Rational poisson_factor_exact(int n) {
  if (n < 1) throw InvalidInput("poisson_factor_exact requires n >= 1");
  Rational term(1);
  Rational sum(1);
  for (int k = 1; k <= n; ++k) {
    term *= make_rational(n - k + 1, n);
    sum += term;
  }
  return sum;
}

Rational expected_pi1_exact(int n, int exact_limit) {
  if (n < 1) throw InvalidInput("expected_pi1_exact requires n >= 1");
  if (n > exact_limit)
    throw LimitExceeded("exact expectation capped at n = " + std::to_string(exact_limit) +
                        "; use the float evaluation instead");
  return (Rational(n) + 3 - poisson_factor_exact(n)) / 2;
}

double expected_pi1_value(int n) {
  if (n < 1) throw InvalidInput("expected_pi1_value requires n >= 1");
  return 0.5 * (n + 3.0 - poisson_factor(n));
}

double expected_pi1_asymptotic(int n) {
  if (n < 1) throw InvalidInput("expected_pi1_asymptotic requires n >= 1");
  return 0.5 * (n - std::sqrt(M_PI * n / 2.0) + 7.0 / 3.0);
}

Rational expected_displacement_exact(int n, int exact_limit) {
  Rational e = expected_pi1_exact(n, exact_limit);
  return make_rational(Integer(n + 1) * Integer(n + 2), 2) - Rational(n + 1) * e;
}

double expected_displacement_value(int n) {
  if (n < 1) throw InvalidInput("expected_displacement_value requires n >= 1");
  return 0.5 * (n + 1.0) * (poisson_factor(n) - 1.0);
}

double expected_displacement_asymptotic(int n) {
  if (n < 1) throw InvalidInput("expected_displacement_asymptotic requires n >= 1");
  return std::sqrt(2.0 * M_PI) / 4.0 * std::pow(n, 1.5) - n / 6.0;
}

DiffVector::DiffVector(std::vector<int> residues) : residues_(std::move(residues)) {
  if (residues_.empty()) throw InvalidInput("difference vector must be nonempty");
  int modulus = static_cast<int>(residues_.size());  // = n - 1
  for (int r : residues_)
    if (r < 0 || r >= modulus)
      throw InvalidInput("difference residues must lie in 0.." + std::to_string(modulus - 1));
}

DiffVector l_map(const PrefVector& p) {
  if (p.size() < 2) throw InvalidInput("l_map requires length >= 2");
  if (!is_prime_parking_function(p))
    throw InvalidInput("l_map is defined on prime parking functions");
  return DiffVector(detail::forward_residues(p.entries()));
}

namespace {

// Representative of v in 1..m.
inline int rep1(int v, int m) { return (v - 1) % m + ((v - 1) % m < 0 ? m : 0) + 1; }

}  // namespace

PrefVector unique_rotation(const std::vector<int>& pi0) {
  int n = static_cast<int>(pi0.size());
  if (n < 2) throw InvalidInput("unique_rotation requires length >= 2");
  int m = n - 1;
  for (int v : pi0)
    if (v < 1 || v > m)
      throw InvalidInput("rotation entries must lie in 1.." + std::to_string(m));
  std::vector<int> candidate(n);
  std::vector<int> found;
  int hits = 0;
  for (int shift = 0; shift < m; ++shift) {
    for (int i = 0; i < n; ++i) candidate[i] = rep1(pi0[i] + shift, m);
    if (detail::is_ppf_entries(candidate)) {
      ++hits;
      found = candidate;
    }
  }
  if (hits != 1)
    throw ConsistencyError("circular rotation found " + std::to_string(hits) +
                           " valid shifts instead of exactly one");
  return PrefVector(std::move(found));
}

PrefVector l_inverse(const DiffVector& d) {
  int n = d.length_n();
  int m = n - 1;
  std::vector<int> pi0(n);
  pi0[0] = 1;
  for (int i = 1; i < n; ++i) pi0[i] = rep1(pi0[i - 1] + d.residues()[i - 1], m);
  return unique_rotation(pi0);
}

PrefVector kalikow_sample_one(int n, SplitMix64& rng) {
  if (n < 2) throw InvalidInput("kalikow_sample_one requires n >= 2");
  std::uint64_t m = static_cast<std::uint64_t>(n - 1);
  std::vector<int> pi0(n);
  for (int i = 0; i < n; ++i) pi0[i] = static_cast<int>(bounded(rng, m)) + 1;
  return unique_rotation(pi0);
}

std::vector<PrefVector> kalikow_samples(const SampleConfig& cfg) {
  std::vector<PrefVector> out;
  out.reserve(static_cast<std::size_t>(cfg.samples));
  kalikow_sample(cfg, [&](const PrefVector& p) { out.push_back(p); });
  return out;
}

ExpectedStats expected_stats_exact(int n, int limit) {
  if (n < 2) throw InvalidInput("expected_stats_exact requires n >= 2");
  long long total = 0;
  long long ties = 0, descents = 0, ascents = 0;
  std::vector<long long> residue_totals(n - 1, 0);
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        ++total;
        detail::StatCounts c = detail::stat_counts(a);
        ties += c.ties;
        descents += c.descents;
        ascents += c.ascents;
        for (int r : detail::forward_residues(a)) ++residue_totals[r];
      },
      limit);
  for (int r = 0; r < n - 1; ++r)
    if (residue_totals[r] != total)
      throw ConsistencyError("average count for residue " + std::to_string(r) +
                             " differs from 1");
  Integer denom = to_integer(total);
  return {make_rational(to_integer(ties), denom), make_rational(to_integer(descents), denom),
          make_rational(to_integer(ascents), denom)};
}

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }

  MonteCarloStat finish(long long count, std::optional<Rational> exact) const {
    MonteCarloStat s;
    s.mean = sum / static_cast<double>(count);
    if (count > 1) {
      double var = (sum_sq - sum * sum / static_cast<double>(count)) /
                   static_cast<double>(count - 1);
      if (var < 0) var = 0;  // guards tiny negative rounding residue
      s.se = std::sqrt(var / static_cast<double>(count));
    }
    s.exact = std::move(exact);
    return s;
  }
};

}  // namespace

MonteCarloReport monte_carlo_report(const SampleConfig& cfg) {
  Accumulator pi1, disp, ties, descents, ascents;
  kalikow_sample(cfg, [&](const PrefVector& p) {
    pi1.add(p[0]);
    disp.add(static_cast<double>(detail::displacement_entries(p.entries())));
    detail::StatCounts c = detail::stat_counts(p.entries());
    ties.add(c.ties);
    descents.add(c.descents);
    ascents.add(c.ascents);
  });

  std::optional<Rational> pi1_exact, disp_exact;
  if (cfg.n - 1 <= kDefaultExactLimit) {
    pi1_exact = expected_pi1_exact(cfg.n - 1);
    disp_exact = expected_displacement_exact(cfg.n - 1);
  }
  MonteCarloReport report;
  report.n = cfg.n;
  report.samples = cfg.samples;
  report.seed = cfg.seed;
  report.pi1 = pi1.finish(cfg.samples, pi1_exact);
  report.displacement = disp.finish(cfg.samples, disp_exact);
  report.ties = ties.finish(cfg.samples, Rational(1));
  report.descents = descents.finish(cfg.samples, make_rational(cfg.n - 2, 2));
  report.ascents = ascents.finish(cfg.samples, make_rational(cfg.n - 2, 2));
  return report;
}

}  // namespace parkfn

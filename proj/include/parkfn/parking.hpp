#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "parkfn/errors.hpp"
#include "parkfn/numbers.hpp"

namespace parkfn {

// A car-preference sequence. Entries are 1-based spot preferences; the
// constructor enforces a nonempty sequence of positive integers. All printed
// positions and set indices throughout the library are 1-based as well.
class PrefVector {
 public:
  explicit PrefVector(std::vector<int> entries);

  // Parses a comma-separated list such as "2,1,3".
  static PrefVector parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }  // 0-based access
  const std::vector<int>& entries() const { return entries_; }
  long long sum() const;
  std::string str() const;

  friend bool operator==(const PrefVector&, const PrefVector&) = default;
  friend std::strong_ordering operator<=>(const PrefVector& a, const PrefVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

struct ParkingOutcome {
  std::vector<int> spot_of_car;           // car i (1-based) parks in spot_of_car[i-1]
  std::vector<int> per_car_displacement;  // spot - preference, always >= 0
  long long total = 0;
};

struct StatProfile {
  std::vector<int> descent_set;  // positions i with x_i > x_{i+1}
  std::vector<int> ascent_set;   // positions i with x_i < x_{i+1}
  std::vector<int> tie_set;      // positions i with x_i = x_{i+1}
  int ones_count = 0;
  // forward_diff_sets[r] holds the positions i with
  // x_{i+1} - x_i = r (mod n-1), for residues r = 0..n-2; empty when n < 2.
  std::vector<std::vector<int>> forward_diff_sets;
};

// Low-level helpers on raw entry vectors. They assume positive entries and
// are shared by the enumeration loops, where constructing PrefVector values
// per visit would dominate the cost.
namespace detail {

inline bool is_pf_entries(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return false;
  std::vector<int> cnt(n + 1, 0);
  for (int v : a) {
    if (v < 1 || v > n) return false;
    ++cnt[v];
  }
  int seen = 0;
  for (int i = 1; i <= n; ++i) {
    seen += cnt[i];
    if (seen < i) return false;
  }
  return true;
}

// Prime test: at least i+1 cars prefer the first i spots, for every i < n.
inline bool is_ppf_entries(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return false;
  if (n == 1) return a[0] == 1;
  std::vector<int> cnt(n + 1, 0);
  for (int v : a) {
    if (v < 1 || v > n) return false;
    ++cnt[v];
  }
  int seen = 0;
  for (int i = 1; i < n; ++i) {
    seen += cnt[i];
    if (seen < i + 1) return false;
  }
  return true;
}

// Total displacement via the preference-sum identity; assumes a parking
// function.
inline long long displacement_entries(const std::vector<int>& a) {
  long long n = static_cast<long long>(a.size());
  long long s = 0;
  for (int v : a) s += v;
  return n * (n + 1) / 2 - s;
}

struct StatCounts {
  int ties = 0;
  int descents = 0;
  int ascents = 0;
};

inline StatCounts stat_counts(const std::vector<int>& a) {
  StatCounts c;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] == a[i + 1])
      ++c.ties;
    else if (a[i] > a[i + 1])
      ++c.descents;
    else
      ++c.ascents;
  }
  return c;
}

// Consecutive differences mod n-1 with canonical residues 0..n-2;
// empty for n < 2.
inline std::vector<int> forward_residues(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (n < 2) return {};
  int m = n - 1;
  std::vector<int> r(n - 1);
  for (int i = 0; i + 1 < n; ++i) r[i] = ((a[i + 1] - a[i]) % m + m) % m;
  return r;
}

}  // namespace detail

bool is_parking_function(const PrefVector& p);

// Prime parking function test via the occupancy criterion: at least i+1 cars
// prefer the first i spots for every i < n.
bool is_prime_parking_function(const PrefVector& p);

// Independent route: deleting any single occurrence of 1 must leave a parking
// function of length n-1. Agrees with is_prime_parking_function everywhere.
bool is_prime_parking_function_removal(const PrefVector& p);

// Simulates the linear probe. Throws ParkingFailure when a car runs off the
// end of the lot, i.e. when p is not a parking function.
ParkingOutcome park(const PrefVector& p);

// Total displacement of a parking function; throws InvalidInput otherwise.
long long displacement(const PrefVector& p);

StatProfile stat_profile(const PrefVector& p);

// Default bound on exhaustive enumeration lengths (about 17M objects).
inline constexpr int kDefaultEnumLimit = 9;

namespace detail {

// DFS over [n]^n in lexicographic order with prefix pruning: a prefix
// survives only while the remaining entries can still satisfy every
// occupancy threshold.
template <class Visit>
void enum_parking(int n, bool prime, Visit&& visit, int limit) {
  if (n < 1) throw InvalidInput("enumeration requires length n >= 1");
  if (n > limit)
    throw LimitExceeded("enumeration of length " + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(limit));
  std::vector<int> entries(n, 0);
  std::vector<int> cnt(n + 1, 0);

  auto feasible = [&](int placed) {
    int seen = 0;
    int slack = n - placed;
    for (int i = 1; i <= n; ++i) {
      seen += cnt[i];
      int need = (prime && i < n) ? i + 1 : i;
      if (seen + slack < need) return false;
    }
    return true;
  };

  const int vmax = (prime && n >= 2) ? n - 1 : n;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      visit(std::as_const(entries));
      return;
    }
    for (int v = 1; v <= vmax; ++v) {
      entries[k] = v;
      ++cnt[v];
      if (feasible(k + 1)) self(self, k + 1);
      --cnt[v];
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Streams all parking functions of length n in lexicographic order.
template <class Visit>
void for_each_pf(int n, Visit&& visit, int limit = kDefaultEnumLimit) {
  detail::enum_parking(n, false, std::forward<Visit>(visit), limit);
}

// Streams all prime parking functions of length n in lexicographic order.
template <class Visit>
void for_each_ppf(int n, Visit&& visit, int limit = kDefaultEnumLimit) {
  detail::enum_parking(n, true, std::forward<Visit>(visit), limit);
}

std::vector<PrefVector> enumerate_pf(int n, int limit = kDefaultEnumLimit);
std::vector<PrefVector> enumerate_ppf(int n, int limit = kDefaultEnumLimit);

// |PF_n| = (n+1)^(n-1), with |PF_0| = 1 so boundary terms of the first-entry
// formulas are well defined.
Integer count_pf(int n);

// |PPF_n| = (n-1)^(n-1) for n >= 2; the length-1 sequence (1) is the sole
// element for n = 1.
Integer count_ppf(int n);

// Number of parking functions of length n with first entry j.
Integer count_pf_first(int n, int j);

// Number of parking functions of length n with exactly k ones.
Integer count_pf_ones(int n, int k);

// Number of parking functions of length n with first entry j >= 2 and
// exactly k ones. Zero when k exceeds n-1.
Integer f_n_jk(int n, int j, int k);

// Number of prime parking functions of length n_plus_1 with first entry j.
// Entries never reach n_plus_1, so j = n_plus_1 yields zero.
Integer count_ppf_first(int n_plus_1, int j);

// Number of prime parking functions of length n whose positions with
// residue ell (mod n-1) between consecutive entries are exactly the set s.
Integer count_forward_diff_set(int n, int ell, const std::vector<int>& s);

// Joint version for two distinct residues and disjoint position sets.
Integer count_forward_diff_set_pair(int n, int ell, int m, const std::vector<int>& s,
                                    const std::vector<int>& t);

}  // namespace parkfn

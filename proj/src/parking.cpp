#include "parkfn/parking.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace parkfn {

PrefVector::PrefVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("preference sequence must be nonempty");
  for (int v : entries_)
    if (v < 1)
      throw InvalidInput("preference entries must be positive, got " + std::to_string(v));
}

PrefVector PrefVector::parse(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t begin = token.find_first_not_of(" \t");
    std::size_t end = token.find_last_not_of(" \t");
    if (begin == std::string::npos)
      throw InvalidInput("empty entry in preference list \"" + text + "\"");
    token = token.substr(begin, end - begin + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw InvalidInput("trailing characters");
      entries.push_back(v);
    } catch (const InvalidInput&) {
      throw InvalidInput("cannot parse preference entry \"" + token + "\"");
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse preference entry \"" + token + "\"");
    }
  }
  return PrefVector(std::move(entries));
}

long long PrefVector::sum() const {
  long long s = 0;
  for (int v : entries_) s += v;
  return s;
}

std::string PrefVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool is_parking_function(const PrefVector& p) { return detail::is_pf_entries(p.entries()); }

bool is_prime_parking_function(const PrefVector& p) {
  return detail::is_ppf_entries(p.entries());
}

bool is_prime_parking_function_removal(const PrefVector& p) {
  const std::vector<int>& a = p.entries();
  if (!detail::is_pf_entries(a)) return false;
  int n = static_cast<int>(a.size());
  if (n == 1) return true;  // removing the single 1 leaves the empty sequence
  // Removing any occurrence of the value 1 gives the same multiset, so one
  // removal position per distinct value-1 slot suffices; we still check each
  // occurrence literally.
  bool saw_one = false;
  for (int i = 0; i < n; ++i) {
    if (a[i] != 1) continue;
    saw_one = true;
    std::vector<int> shorter;
    shorter.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) shorter.push_back(a[j]);
    if (!detail::is_pf_entries(shorter)) return false;
  }
  return saw_one;
}

ParkingOutcome park(const PrefVector& p) {
  int n = p.size();
  ParkingOutcome out;
  out.spot_of_car.resize(n);
  out.per_car_displacement.resize(n);
  std::vector<char> occupied(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int s = p[i];
    while (s <= n && occupied[s]) ++s;
    if (s > n)
      throw ParkingFailure("car " + std::to_string(i + 1) + " with preference " +
                           std::to_string(p[i]) + " probes past spot " + std::to_string(n));
    occupied[s] = 1;
    out.spot_of_car[i] = s;
    out.per_car_displacement[i] = s - p[i];
    out.total += s - p[i];
  }
  long long via_sum = static_cast<long long>(n) * (n + 1) / 2 - p.sum();
  if (out.total != via_sum)
    throw ConsistencyError("simulated displacement disagrees with the preference-sum identity");
  return out;
}

long long displacement(const PrefVector& p) {
  if (!is_parking_function(p))
    throw InvalidInput("displacement is defined for parking functions only");
  return detail::displacement_entries(p.entries());
}

StatProfile stat_profile(const PrefVector& p) {
  const std::vector<int>& a = p.entries();
  int n = static_cast<int>(a.size());
  StatProfile sp;
  for (int v : a)
    if (v == 1) ++sp.ones_count;
  for (int i = 0; i + 1 < n; ++i) {
    int pos = i + 1;  // 1-based position
    if (a[i] > a[i + 1])
      sp.descent_set.push_back(pos);
    else if (a[i] < a[i + 1])
      sp.ascent_set.push_back(pos);
    else
      sp.tie_set.push_back(pos);
  }
  if (n >= 2) {
    sp.forward_diff_sets.assign(n - 1, {});
    std::vector<int> res = detail::forward_residues(a);
    for (int i = 0; i < n - 1; ++i) sp.forward_diff_sets[res[i]].push_back(i + 1);
  }
  return sp;
}

std::vector<PrefVector> enumerate_pf(int n, int limit) {
  std::vector<PrefVector> out;
  for_each_pf(n, [&](const std::vector<int>& a) { out.push_back(PrefVector(a)); }, limit);
  return out;
}

std::vector<PrefVector> enumerate_ppf(int n, int limit) {
  std::vector<PrefVector> out;
  for_each_ppf(n, [&](const std::vector<int>& a) { out.push_back(PrefVector(a)); }, limit);
  return out;
}

Integer count_pf(int n) {
  if (n < 0) throw InvalidInput("count_pf requires n >= 0");
  if (n == 0) return 1;
  return ipow(n + 1, n - 1);
}

Integer count_ppf(int n) {
  if (n < 1) throw InvalidInput("count_ppf requires n >= 1");
  if (n == 1) return 1;
  return ipow(n - 1, n - 1);
}

Integer count_pf_first(int n, int j) {
  if (n < 1) throw InvalidInput("count_pf_first requires n >= 1");
  if (j < 1 || j > n) throw InvalidInput("count_pf_first: first entry out of range");
  Integer total = 0;
  for (int l = j; l <= n; ++l)
    total += binomial(n - 1, l - 1) * count_pf(l - 1) * count_pf(n - l);
  return total;
}

Integer count_pf_ones(int n, int k) {
  if (n < 1) throw InvalidInput("count_pf_ones requires n >= 1");
  if (k < 1 || k > n) throw InvalidInput("count_pf_ones: ones count out of range");
  return binomial(n - 1, k - 1) * ipow(n, n - k);
}

Integer f_n_jk(int n, int j, int k) {
  if (n < 2) throw InvalidInput("f_n_jk requires n >= 2");
  if (j < 2 || j > n) throw InvalidInput("f_n_jk: first entry must lie in [2, n]");
  if (k < 1) throw InvalidInput("f_n_jk: ones count must be positive");
  Integer total = 0;
  for (int l = std::max(j, k + 1); l <= n; ++l)
    total += binomial(n - 1, l - 1) * binomial(l - 2, k - 1) * ipow(l - 1, l - 1 - k) *
             count_pf(n - l);
  return total;
}

Integer count_ppf_first(int n_plus_1, int j) {
  if (n_plus_1 < 2) throw InvalidInput("count_ppf_first requires length >= 2");
  if (j < 1 || j > n_plus_1) throw InvalidInput("count_ppf_first: first entry out of range");
  int n = n_plus_1 - 1;
  if (j == n_plus_1) return 0;  // entries of a prime sequence never reach its length
  if (j == 1) return count_pf(n);
  Rational total(0);
  for (int k = 1; k <= n - 1; ++k)
    total += make_rational(Integer(n) * f_n_jk(n, j, k), Integer(k + 1));
  return to_integer(total, "count_ppf_first");
}

namespace {

// Validates an index set over [1, n-1] and returns its size.
int checked_set_size(const std::vector<int>& s, int n, const char* name) {
  std::set<int> seen;
  for (int i : s) {
    if (i < 1 || i > n - 1)
      throw InvalidInput(std::string(name) + ": position " + std::to_string(i) +
                         " outside [1, " + std::to_string(n - 1) + "]");
    if (!seen.insert(i).second)
      throw InvalidInput(std::string(name) + ": duplicate position " + std::to_string(i));
  }
  return static_cast<int>(seen.size());
}

}  // namespace

Integer count_forward_diff_set(int n, int ell, const std::vector<int>& s) {
  if (n < 2) throw InvalidInput("count_forward_diff_set requires n >= 2");
  if (ell < 0 || ell > n - 2) throw InvalidInput("count_forward_diff_set: residue out of range");
  int size = checked_set_size(s, n, "count_forward_diff_set");
  return ipow(n - 2, n - 1 - size);
}

Integer count_forward_diff_set_pair(int n, int ell, int m, const std::vector<int>& s,
                                    const std::vector<int>& t) {
  if (n < 3) throw InvalidInput("count_forward_diff_set_pair requires n >= 3");
  if (ell < 0 || ell > n - 2 || m < 0 || m > n - 2)
    throw InvalidInput("count_forward_diff_set_pair: residue out of range");
  if (ell == m) throw InvalidInput("count_forward_diff_set_pair: residues must differ");
  int ssize = checked_set_size(s, n, "count_forward_diff_set_pair");
  int tsize = checked_set_size(t, n, "count_forward_diff_set_pair");
  std::set<int> ss(s.begin(), s.end());
  for (int i : t)
    if (ss.count(i))
      throw InvalidInput("count_forward_diff_set_pair: sets overlap at position " +
                         std::to_string(i));
  return ipow(n - 3, n - 1 - ssize - tsize);
}

}  // namespace parkfn

#pragma once

#include <cstdint>
#include <vector>

#include "parkfn/parking.hpp"
#include "parkfn/rng.hpp"

namespace testutil {

// Uniform tuple in [1, high]^n.
inline std::vector<int> random_tuple(parkfn::SplitMix64& rng, int n, int high) {
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i)
    a[i] = static_cast<int>(parkfn::bounded(rng, static_cast<std::uint64_t>(high))) + 1;
  return a;
}

// Uniform parking function of length n by rejection from [n]^n.
inline parkfn::PrefVector random_pf(parkfn::SplitMix64& rng, int n) {
  for (;;) {
    std::vector<int> a = random_tuple(rng, n, n);
    if (parkfn::detail::is_pf_entries(a)) return parkfn::PrefVector(std::move(a));
  }
}

// Walks all tuples in [high]^n (not just parking functions).
template <class Visit>
void for_each_tuple(int n, int high, Visit&& visit) {
  std::vector<int> a(n, 1);
  for (;;) {
    visit(const_cast<const std::vector<int>&>(a));
    int i = n - 1;
    while (i >= 0 && a[i] == high) {
      a[i] = 1;
      --i;
    }
    if (i < 0) return;
    ++a[i];
  }
}

}  // namespace testutil

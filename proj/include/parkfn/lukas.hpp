#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parkfn/numbers.hpp"
#include "parkfn/parking.hpp"

namespace parkfn {

// A step sequence with every step >= -1, all prefix sums nonnegative and
// total sum zero. Drawn as a lattice path from (0,0) to (n,0) where step s
// moves by (s+1, s), the word is prime when the path touches the axis only
// at its endpoints.
class LukasiewiczWord {
 public:
  explicit LukasiewiczWord(std::vector<int> steps);

  const std::vector<int>& steps() const { return steps_; }
  int size() const { return static_cast<int>(steps_.size()); }

  // All interior prefix sums are at least 1.
  bool prime() const;

  friend bool operator==(const LukasiewiczWord&, const LukasiewiczWord&) = default;

 private:
  std::vector<int> steps_;
};

// Running heights h_0..h_n (h_0 = h_n = 0).
std::vector<int> height_sequence(const LukasiewiczWord& w);

// Sum of all heights; for the word of a parking function this equals the
// total displacement.
long long area(const LukasiewiczWord& w);

// Step j records one less than the number of cars preferring spot j.
LukasiewiczWord word_from_pf(const PrefVector& p);

// A word together with an ordered partition of [n] into possibly-empty
// blocks, block i of size step_i + 1 listing (ascending) the cars that
// prefer spot i.
class LabeledLukasiewiczPath {
 public:
  LabeledLukasiewiczPath(LukasiewiczWord word, std::vector<std::vector<int>> blocks);

  const LukasiewiczWord& word() const { return word_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int size() const { return word_.size(); }

  friend bool operator==(const LabeledLukasiewiczPath&, const LabeledLukasiewiczPath&) = default;

 private:
  LukasiewiczWord word_;
  std::vector<std::vector<int>> blocks_;
};

LabeledLukasiewiczPath labeled_path_from_pf(const PrefVector& p);

// Reads the preference of car k as the block index containing k.
PrefVector pf_from_labeled_path(const LabeledLukasiewiczPath& path);

// Concatenation of the blocks in order; a permutation of [n].
std::vector<int> alpha_permutation(const LabeledLukasiewiczPath& path);

struct PathStatSets {
  std::vector<int> descent_set;
  std::vector<int> ascent_set;
  std::vector<int> tie_set;
};

// Descents/ascents/ties of a labeled path: position i is a tie when i and
// i+1 share a block, a descent when i+1 sits in an earlier block, an ascent
// when it sits in a later one. Matches the statistics of the corresponding
// parking function.
PathStatSets path_stat_sets(const LabeledLukasiewiczPath& path);

// North/east word from (0,0) to (n,n) staying weakly above the diagonal,
// with car labels on the north steps increasing within each vertical run.
class LabeledDyckPath {
 public:
  LabeledDyckPath(std::string word, std::vector<int> labels);

  const std::string& word() const { return word_; }
  // Car labels in north-step order along the path.
  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }

  friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;

 private:
  std::string word_;
  std::vector<int> labels_;
};

// Column i of the Dyck path gets step_i + 1 north steps labeled by block i.
LabeledDyckPath dyck_from_labeled_lukas(const LabeledLukasiewiczPath& path);
LabeledLukasiewiczPath lukas_from_labeled_dyck(const LabeledDyckPath& dyck);
PrefVector pf_from_labeled_dyck(const LabeledDyckPath& dyck);

namespace detail {

// DFS over step words; steps are tried from -1 upward, so the order is
// deterministic. The cap keeps the remaining descent able to reach zero.
template <class Visit>
void enum_lukas(int n, bool prime, Visit&& visit, int limit) {
  if (n < 1) throw InvalidInput("path enumeration requires length n >= 1");
  if (n > limit)
    throw LimitExceeded("path enumeration of length " + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(limit));
  std::vector<int> steps(n, 0);
  auto rec = [&](auto&& self, int k, int height) -> void {
    if (k == n) {
      visit(std::as_const(steps));
      return;
    }
    int cap = n - k - 1 - height;
    for (int s = -1; s <= cap; ++s) {
      int h = height + s;
      if (h < 0) continue;
      if (k + 1 == n) {
        if (h != 0) continue;
      } else if (prime && h < 1) {
        continue;
      }
      steps[k] = s;
      self(self, k + 1, h);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

template <class Visit>
void for_each_lukas(int n, Visit&& visit, int limit = kDefaultEnumLimit) {
  detail::enum_lukas(n, false, std::forward<Visit>(visit), limit);
}

template <class Visit>
void for_each_prime_lukas(int n, Visit&& visit, int limit = kDefaultEnumLimit) {
  detail::enum_lukas(n, true, std::forward<Visit>(visit), limit);
}

std::vector<LukasiewiczWord> enumerate_lukas(int n, int limit = kDefaultEnumLimit);
std::vector<LukasiewiczWord> enumerate_prime_lukas(int n, int limit = kDefaultEnumLimit);

// Sum of n!/prod((step_i+1)!) over all (prime) words of length n: the number
// of ways to label the words, which recovers the parking function counts.
Integer labeled_path_count(int n, bool prime, int limit = kDefaultEnumLimit);

}  // namespace parkfn

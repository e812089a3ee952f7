#include "parkfn/lukas.hpp"

#include <algorithm>

namespace parkfn {

LukasiewiczWord::LukasiewiczWord(std::vector<int> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidInput("step word must be nonempty");
  long long h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] < -1)
      throw InvalidInput("step " + std::to_string(i + 1) + " is below -1");
    h += steps_[i];
    if (h < 0)
      throw InvalidInput("prefix sum dips below zero after step " + std::to_string(i + 1));
  }
  if (h != 0) throw InvalidInput("step word does not return to height zero");
}

bool LukasiewiczWord::prime() const {
  long long h = 0;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    h += steps_[i];
    if (h < 1) return false;
  }
  return true;
}

std::vector<int> height_sequence(const LukasiewiczWord& w) {
  std::vector<int> h(w.size() + 1, 0);
  for (int j = 1; j <= w.size(); ++j) h[j] = h[j - 1] + w.steps()[j - 1];
  return h;
}

long long area(const LukasiewiczWord& w) {
  long long total = 0;
  long long h = 0;
  for (int s : w.steps()) {
    h += s;
    total += h;
  }
  return total;
}

LukasiewiczWord word_from_pf(const PrefVector& p) {
  if (!is_parking_function(p))
    throw InvalidInput("word_from_pf requires a parking function");
  int n = p.size();
  std::vector<int> steps(n, -1);
  for (int v : p.entries()) ++steps[v - 1];
  LukasiewiczWord w(std::move(steps));
  if (w.prime() != is_prime_parking_function(p))
    throw ConsistencyError("prime flag of the word disagrees with the prime parking test");
  return w;
}

LabeledLukasiewiczPath::LabeledLukasiewiczPath(LukasiewiczWord word,
                                               std::vector<std::vector<int>> blocks)
    : word_(std::move(word)), blocks_(std::move(blocks)) {
  int n = word_.size();
  if (static_cast<int>(blocks_.size()) != n)
    throw InvalidInput("labeled path needs exactly one block per step");
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(blocks_[i].size()) != word_.steps()[i] + 1)
      throw InvalidInput("block " + std::to_string(i + 1) + " has size " +
                         std::to_string(blocks_[i].size()) + ", expected " +
                         std::to_string(word_.steps()[i] + 1));
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      int car = blocks_[i][j];
      if (car < 1 || car > n) throw InvalidInput("block label outside [1, n]");
      if (seen[car]) throw InvalidInput("label " + std::to_string(car) + " repeated");
      seen[car] = 1;
      if (j > 0 && blocks_[i][j - 1] >= car)
        throw InvalidInput("block " + std::to_string(i + 1) + " is not strictly increasing");
    }
  }
}

LabeledLukasiewiczPath labeled_path_from_pf(const PrefVector& p) {
  LukasiewiczWord word = word_from_pf(p);
  int n = p.size();
  std::vector<std::vector<int>> blocks(n);
  for (int car = 1; car <= n; ++car) blocks[p[car - 1] - 1].push_back(car);
  return LabeledLukasiewiczPath(std::move(word), std::move(blocks));
}

PrefVector pf_from_labeled_path(const LabeledLukasiewiczPath& path) {
  int n = path.size();
  std::vector<int> prefs(n, 0);
  for (int spot = 1; spot <= n; ++spot)
    for (int car : path.blocks()[spot - 1]) prefs[car - 1] = spot;
  return PrefVector(std::move(prefs));
}

std::vector<int> alpha_permutation(const LabeledLukasiewiczPath& path) {
  std::vector<int> perm;
  perm.reserve(path.size());
  for (const auto& block : path.blocks()) perm.insert(perm.end(), block.begin(), block.end());
  return perm;
}

PathStatSets path_stat_sets(const LabeledLukasiewiczPath& path) {
  int n = path.size();
  std::vector<int> block_of(n + 1, 0);
  for (int b = 0; b < n; ++b)
    for (int car : path.blocks()[b]) block_of[car] = b;
  PathStatSets sets;
  for (int i = 1; i < n; ++i) {
    if (block_of[i] == block_of[i + 1])
      sets.tie_set.push_back(i);
    else if (block_of[i + 1] < block_of[i])
      sets.descent_set.push_back(i);
    else
      sets.ascent_set.push_back(i);
  }
  return sets;
}

LabeledDyckPath::LabeledDyckPath(std::string word, std::vector<int> labels)
    : word_(std::move(word)), labels_(std::move(labels)) {
  int n = static_cast<int>(labels_.size());
  if (n == 0) throw InvalidInput("labeled Dyck path must be nonempty");
  if (static_cast<int>(word_.size()) != 2 * n)
    throw InvalidInput("Dyck word must have length 2n");
  int norths = 0, easts = 0;
  for (char c : word_) {
    if (c == 'N')
      ++norths;
    else if (c == 'E')
      ++easts;
    else
      throw InvalidInput("Dyck word may only contain N and E");
    if (easts > norths) throw InvalidInput("Dyck word dips below the diagonal");
  }
  if (norths != easts) throw InvalidInput("Dyck word needs equal numbers of N and E steps");
  std::vector<char> seen(n + 1, 0);
  std::size_t step = 0;
  int prev_in_run = 0;
  for (char c : word_) {
    if (c == 'E') {
      prev_in_run = 0;
      continue;
    }
    int label = labels_[step++];
    if (label < 1 || label > n) throw InvalidInput("north-step label outside [1, n]");
    if (seen[label]) throw InvalidInput("label " + std::to_string(label) + " repeated");
    seen[label] = 1;
    if (prev_in_run >= label)
      throw InvalidInput("labels must increase within each vertical run");
    prev_in_run = label;
  }
}

LabeledDyckPath dyck_from_labeled_lukas(const LabeledLukasiewiczPath& path) {
  std::string word;
  std::vector<int> labels;
  labels.reserve(path.size());
  for (int i = 0; i < path.size(); ++i) {
    const auto& block = path.blocks()[i];
    word.append(block.size(), 'N');
    word.push_back('E');
    labels.insert(labels.end(), block.begin(), block.end());
  }
  return LabeledDyckPath(std::move(word), std::move(labels));
}

LabeledLukasiewiczPath lukas_from_labeled_dyck(const LabeledDyckPath& dyck) {
  std::vector<int> steps;
  std::vector<std::vector<int>> blocks;
  std::size_t next_label = 0;
  int run = 0;
  for (char c : dyck.word()) {
    if (c == 'N') {
      ++run;
      continue;
    }
    steps.push_back(run - 1);
    std::vector<int> block(dyck.labels().begin() + next_label,
                           dyck.labels().begin() + next_label + run);
    next_label += run;
    blocks.push_back(std::move(block));
    run = 0;
  }
  return LabeledLukasiewiczPath(LukasiewiczWord(std::move(steps)), std::move(blocks));
}

PrefVector pf_from_labeled_dyck(const LabeledDyckPath& dyck) {
  return pf_from_labeled_path(lukas_from_labeled_dyck(dyck));
}

std::vector<LukasiewiczWord> enumerate_lukas(int n, int limit) {
  std::vector<LukasiewiczWord> out;
  for_each_lukas(n, [&](const std::vector<int>& steps) { out.push_back(LukasiewiczWord(steps)); },
                 limit);
  return out;
}

std::vector<LukasiewiczWord> enumerate_prime_lukas(int n, int limit) {
  std::vector<LukasiewiczWord> out;
  for_each_prime_lukas(
      n, [&](const std::vector<int>& steps) { out.push_back(LukasiewiczWord(steps)); }, limit);
  return out;
}

Integer labeled_path_count(int n, bool prime, int limit) {
  Integer total = 0;
  Integer nfact = factorial(n);
  auto add = [&](const std::vector<int>& steps) {
    Integer term = nfact;
    for (int s : steps) term /= factorial(s + 1);
    total += term;
  };
  if (prime)
    for_each_prime_lukas(n, add, limit);
  else
    for_each_lukas(n, add, limit);
  return total;
}

}  // namespace parkfn

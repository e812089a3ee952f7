#include "parkfn/qsym.hpp"

#include <algorithm>
#include <cstdint>

namespace parkfn {

void MVPoly::add(const Monomial& exps, const UniPoly& coeff) {
  if (static_cast<int>(exps.size()) != vars_)
    throw InvalidInput("monomial arity does not match the variable count");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
  if (vars_ != o.vars_) throw InvalidInput("cannot add polynomials in different variable counts");
  for (const auto& [exps, coeff] : o.terms_) add(exps, coeff);
  return *this;
}

MVPoly MVPoly::scaled(const UniPoly& factor) const {
  MVPoly out(vars_);
  if (factor.is_zero()) return out;
  for (const auto& [exps, coeff] : terms_) out.add(exps, coeff * factor);
  return out;
}

MVPoly MVPoly::scaled(const Integer& factor) const {
  return scaled(UniPoly::constant(factor));
}

MVPoly MVPoly::substitute_q(const Integer& value) const {
  MVPoly out(vars_);
  for (const auto& [exps, coeff] : terms_)
    out.add(exps, UniPoly::constant(coeff.evaluate(value)));
  return out;
}

MVPoly MVPoly::restrict_first_var() const {
  MVPoly out(vars_);
  for (const auto& [exps, coeff] : terms_) {
    bool pure = true;
    for (int j = 1; j < vars_; ++j)
      if (exps[j] != 0) {
        pure = false;
        break;
      }
    if (pure) out.add(exps, coeff);
  }
  return out;
}

MVPoly MVPoly::permuted_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != vars_)
    throw InvalidInput("permutation arity does not match the variable count");
  MVPoly out(vars_);
  for (const auto& [exps, coeff] : terms_) {
    Monomial moved(vars_, 0);
    for (int j = 0; j < vars_; ++j) moved[perm[j]] = exps[j];
    out.add(moved, coeff);
  }
  return out;
}

bool MVPoly::homogeneous_of_degree(int degree) const {
  for (const auto& [exps, coeff] : terms_) {
    int total = 0;
    for (int e : exps) total += e;
    if (total != degree) return false;
  }
  return true;
}

namespace {

// DFS over admissible chains; strict[i] forces b_{i+1} > b_i.
void chain_walk(int n, int k, const std::vector<char>& strict, MVPoly& out) {
  Monomial exps(k, 0);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == n) {
      out.add(exps, UniPoly::constant(1));
      return;
    }
    for (int b = low; b <= k; ++b) {
      ++exps[b - 1];
      self(self, pos + 1, strict[pos] ? b + 1 : b);
      --exps[b - 1];
    }
  };
  rec(rec, 0, 1);
}

}  // namespace

MVPoly fundamental_qsym(int n, const std::vector<int>& strict_positions, int k) {
  if (n < 1) throw InvalidInput("fundamental_qsym requires n >= 1");
  if (k < 1) throw InvalidInput("fundamental_qsym requires at least one variable");
  // strict[pos] with 0-based pos: strictness between chain entries pos+1 and pos+2
  std::vector<char> strict(n, 0);
  for (int i : strict_positions) {
    if (i < 1 || i > n - 1)
      throw InvalidInput("strict position " + std::to_string(i) + " outside [1, n-1]");
    strict[i - 1] = 1;
  }
  MVPoly out(k);
  chain_walk(n, k, strict, out);
  return out;
}

namespace {

MVPoly schur_hook_by_expansion(int i, int n, int k) {
  MVPoly out(k);
  int want = n - i;
  std::vector<int> positions;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(positions.size()) == want) {
      out += fundamental_qsym(n, positions, k);
      return;
    }
    for (int p = next; p <= n - 1; ++p) {
      positions.push_back(p);
      self(self, p + 1);
      positions.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Column-strict fillings of the hook: a corner value, a weakly increasing
// row tail of length i-1 at or above the corner, and a strictly increasing
// column of length n-i above the corner value.
MVPoly schur_hook_by_tableaux(int i, int n, int k) {
  MVPoly out(k);
  Monomial exps(k, 0);
  int row_len = i - 1;
  int col_len = n - i;
  auto column = [&](auto&& self_col, int pos, int low) -> void {
    if (pos == col_len) {
      out.add(exps, UniPoly::constant(1));
      return;
    }
    for (int v = low; v <= k; ++v) {
      ++exps[v - 1];
      self_col(self_col, pos + 1, v + 1);
      --exps[v - 1];
    }
  };
  auto row = [&](auto&& self_row, int corner, int pos, int low) -> void {
    if (pos == row_len) {
      column(column, 0, corner + 1);
      return;
    }
    for (int v = low; v <= k; ++v) {
      ++exps[v - 1];
      self_row(self_row, corner, pos + 1, v);
      --exps[v - 1];
    }
  };
  for (int corner = 1; corner <= k; ++corner) {
    ++exps[corner - 1];
    row(row, corner, 0, corner);
    --exps[corner - 1];
  }
  return out;
}

}  // namespace

MVPoly schur_hook(int i, int n, int k) {
  if (n < 1 || i < 1 || i > n) throw InvalidInput("schur_hook requires 1 <= i <= n");
  if (k < 1) throw InvalidInput("schur_hook requires at least one variable");
  MVPoly by_expansion = schur_hook_by_expansion(i, n, k);
  MVPoly by_tableaux = schur_hook_by_tableaux(i, n, k);
  if (!(by_expansion == by_tableaux))
    throw ConsistencyError("hook Schur computations disagree for i=" + std::to_string(i) +
                           ", n=" + std::to_string(n));
  return by_tableaux;
}

namespace {

std::vector<int> mask_set(std::uint32_t mask, int width) {
  std::vector<int> out;
  for (int i = 1; i <= width; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

}  // namespace

QuasisymCheck verify_quasisym(int n, int k, int limit) {
  if (n < 2) throw InvalidInput("verify_quasisym requires n >= 2");
  if (k < 1) throw InvalidInput("verify_quasisym requires at least one variable");

  std::map<std::uint32_t, long long> tie_hist;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
          if (a[i] == a[i + 1]) mask |= 1u << i;
        ++tie_hist[mask];
      },
      limit);

  QuasisymCheck check;
  check.lhs = MVPoly(k);
  for (const auto& [mask, count] : tie_hist)
    check.lhs += fundamental_qsym(n, mask_set(mask, n - 1), k).scaled(to_integer(count));

  check.rhs = MVPoly(k);
  for (int i = 1; i <= n; ++i)
    check.rhs += schur_hook(i, n, k).scaled(ipow(n - 2, i - 1));

  check.equal = check.lhs == check.rhs;
  return check;
}

QuasisymCorrCheck verify_quasisym_corr(int n, int ell, int m, int k, int limit) {
  if (n < 3) throw InvalidInput("verify_quasisym_corr requires n >= 3");
  if (ell < 0 || ell > n - 2 || m < 0 || m > n - 2)
    throw InvalidInput("verify_quasisym_corr: residue out of range");
  if (ell == m) throw InvalidInput("verify_quasisym_corr: residues must differ");
  if (k < 1) throw InvalidInput("verify_quasisym_corr requires at least one variable");

  // joint histogram keyed by (residue-ell set, residue-m set)
  std::map<std::pair<std::uint32_t, std::uint32_t>, long long> hist;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        std::uint32_t mask_l = 0, mask_m = 0;
        std::vector<int> res = detail::forward_residues(a);
        for (std::size_t i = 0; i < res.size(); ++i) {
          if (res[i] == ell) mask_l |= 1u << i;
          if (res[i] == m) mask_m |= 1u << i;
        }
        ++hist[{mask_l, mask_m}];
      },
      limit);

  std::map<std::uint32_t, MVPoly> qsym_cache;
  auto cached_qsym = [&](std::uint32_t mask) -> const MVPoly& {
    auto it = qsym_cache.find(mask);
    if (it == qsym_cache.end())
      it = qsym_cache.emplace(mask, fundamental_qsym(n, mask_set(mask, n - 1), k)).first;
    return it->second;
  };

  QuasisymCorrCheck check;
  check.lhs1 = MVPoly(k);
  check.lhs2 = MVPoly(k);
  for (const auto& [key, count] : hist) {
    auto [mask_l, mask_m] = key;
    int ell_count = __builtin_popcount(mask_l);
    UniPoly weight = UniPoly::monomial(ell_count, to_integer(count));
    check.lhs1 += cached_qsym(mask_l).scaled(weight);
    check.lhs2 += cached_qsym(mask_m).scaled(weight);
  }

  check.rhs1 = MVPoly(k);
  check.rhs2 = MVPoly(k);
  UniPoly shifted({Integer(n - 3), Integer(1)});
  for (int i = 1; i <= n; ++i) {
    MVPoly hook = schur_hook(i, n, k);
    check.rhs1 += hook.scaled(UniPoly::monomial(n - i, ipow(n - 2, i - 1)));
    check.rhs2 += hook.scaled(shifted.pow(i - 1));
  }

  check.eq1 = check.lhs1 == check.rhs1;
  check.eq2 = check.lhs2 == check.rhs2;
  return check;
}

}  // namespace parkfn

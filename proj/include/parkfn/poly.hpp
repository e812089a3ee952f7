#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkfn/errors.hpp"
#include "parkfn/numbers.hpp"

namespace parkfn {

// Dense univariate polynomial with ascending coefficients and trailing zeros
// trimmed, so the representation is canonical. The zero polynomial is the
// empty coefficient list (degree -1). Equality compares coefficients; the
// variable name is display metadata.
template <class Coeff>
class DensePoly {
 public:
  DensePoly() = default;

  explicit DensePoly(std::vector<Coeff> coeffs, std::string var = "q")
      : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static DensePoly constant(Coeff c, std::string var = "q") {
    return DensePoly(std::vector<Coeff>{std::move(c)}, std::move(var));
  }

  static DensePoly monomial(int degree, Coeff c, std::string var = "q") {
    if (degree < 0) throw InvalidInput("monomial: negative degree");
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return DensePoly(std::move(v), std::move(var));
  }

  const std::string& var() const { return var_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[d];
  }

  void add_at(int degree, const Coeff& c) {
    if (degree < 0) throw InvalidInput("add_at: negative degree");
    if (degree >= static_cast<int>(coeffs_.size())) coeffs_.resize(degree + 1, Coeff(0));
    coeffs_[degree] += c;
    trim();
  }

  // Value at 1, i.e. the coefficient sum.
  Coeff value_at_one() const {
    Coeff s(0);
    for (const Coeff& c : coeffs_) s += c;
    return s;
  }

  Coeff evaluate(const Coeff& x) const {
    Coeff r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  DensePoly operator+(const DensePoly& o) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), o.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return DensePoly(std::move(v), var_);
  }

  DensePoly operator-(const DensePoly& o) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), o.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return DensePoly(std::move(v), var_);
  }

  DensePoly operator*(const DensePoly& o) const {
    if (is_zero() || o.is_zero()) return DensePoly({}, var_);
    std::vector<Coeff> v(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return DensePoly(std::move(v), var_);
  }

  DensePoly operator*(const Coeff& c) const {
    std::vector<Coeff> v = coeffs_;
    for (Coeff& x : v) x *= c;
    return DensePoly(std::move(v), var_);
  }

  DensePoly pow(unsigned long e) const {
    DensePoly r = constant(Coeff(1), var_);
    DensePoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form for messages, highest degree first.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      const Coeff& c = coeffs_[d];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      std::string cs = coeff_str(c);
      if (d == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var_;
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

 private:
  static std::string coeff_str(const Integer& c) { return c.get_str(); }
  static std::string coeff_str(const Rational& c) { return c.get_str(); }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::string var_ = "q";
  std::vector<Coeff> coeffs_;
};

using UniPoly = DensePoly<Integer>;
using RatUniPoly = DensePoly<Rational>;

// Converts a rational-coefficient polynomial whose coefficients must all be
// integers; anything else raises an internal-consistency error.
inline UniPoly integer_poly(const RatUniPoly& p) {
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) v.push_back(to_integer(c, "polynomial coefficient"));
  return UniPoly(std::move(v), p.var());
}

// Sparse bivariate polynomial in q and t; no zero terms are stored and term
// order is by (deg_q, deg_t).
class BiPoly {
 public:
  using TermMap = std::map<std::pair<int, int>, Integer>;

  BiPoly() = default;

  // c_q*q + c_t*t + c_0
  static BiPoly linear(const Integer& c_q, const Integer& c_t, const Integer& c_0) {
    BiPoly p;
    p.add_term(1, 0, c_q);
    p.add_term(0, 1, c_t);
    p.add_term(0, 0, c_0);
    return p;
  }

  void add_term(int dq, int dt, const Integer& c) {
    if (dq < 0 || dt < 0) throw InvalidInput("BiPoly: negative degree");
    if (c == 0) return;
    auto key = std::make_pair(dq, dt);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Integer value_at_one() const {
    Integer s(0);
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
  }

  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  BiPoly pow(unsigned long e) const {
    BiPoly r;
    r.add_term(0, 0, 1);
    BiPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Substitutes a value for t, collapsing to a polynomial in q.
  UniPoly substitute_t(const Integer& t_value) const {
    UniPoly r;
    for (const auto& [k, c] : terms_)
      r.add_at(k.first, c * ipow(t_value, static_cast<unsigned long>(k.second)));
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

}  // namespace parkfn

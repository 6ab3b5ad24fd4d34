#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asepk/field.hpp"

namespace asepk {

using Exponent = std::vector<int>;

// Multivariate Laurent polynomial with coefficients in a field K.
template <class K>
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, K>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const K& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static LaurentPoly monomial(std::vector<std::string> vars, Exponent e, const K& c = K(Rational(1))) {
    LaurentPoly p(std::move(vars));
    require(e.size() == p.vars_.size(), ErrorKind::Structural, "exponent length does not match variables");
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly variable(std::vector<std::string> vars, std::size_t idx, int power = 1) {
    Exponent e(vars.size(), 0);
    e.at(idx) = power;
    return monomial(std::move(vars), std::move(e));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(Rational(0)) : it->second;
  }

  void add_term(const Exponent& e, const K& c) {
    if (asepk::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (asepk::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  LaurentPoly scaled(const K& s) const {
    LaurentPoly p(vars_);
    if (asepk::is_zero(s)) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, c * s);
    return p;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly p(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Evaluates at a point; throws Pole if a zero meets a negative exponent.
  template <class S>
  S evaluate(const std::vector<S>& point) const {
    require(point.size() == vars_.size(), ErrorKind::Structural, "evaluation point has wrong length");
    S acc(Rational(0));
    for (const auto& [e, c] : terms_) {
      S term = S(c);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) term = term * ipow(point[k], e[k]);
      acc = acc + term;
    }
    return acc;
  }

  // Replaces variable idx by value. Negative powers need value to be a monomial.
  LaurentPoly substitute(std::size_t idx, const LaurentPoly& value) const {
    check_vars(value);
    LaurentPoly out(vars_);
    std::map<int, LaurentPoly> powers;
    for (const auto& [e, c] : terms_) {
      int k = e[idx];
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, value.power(k)).first;
      Exponent rest = e;
      rest[idx] = 0;
      out += monomial(vars_, rest, c) * it->second;
    }
    return out;
  }

  LaurentPoly power(int k) const {
    if (k < 0) {
      require(terms_.size() == 1, ErrorKind::Pole, "negative power of a non-monomial Laurent polynomial");
      const auto& [e, c] = *terms_.begin();
      Exponent ne(e.size());
      for (std::size_t j = 0; j < e.size(); ++j) ne[j] = -e[j];
      return monomial(vars_, ne, checked_div(K(Rational(1)), c)).power(-k);
    }
    LaurentPoly out = constant(vars_, K(Rational(1))), b = *this;
    while (k > 0) {
      if (k & 1) out *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return out;
  }

  LaurentPoly derivative(std::size_t idx) const {
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponent ne = e;
      ne[idx] -= 1;
      out.add_term(ne, c * K(Rational(e[idx])));
    }
    return out;
  }

  template <class F>
  auto map_coeffs(F f) const -> LaurentPoly<decltype(f(std::declval<const K&>()))> {
    LaurentPoly<decltype(f(std::declval<const K&>()))> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  // Lowest and highest exponent of variable idx (0,0 for the zero polynomial).
  std::pair<int, int> exponent_range(std::size_t idx) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first[idx], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[idx]);
      hi = std::max(hi, e[idx]);
    }
    return {lo, hi};
  }

  std::size_t var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    require(it != vars_.end(), ErrorKind::Structural, "unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void check_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_) fail(ErrorKind::Structural, "variable-list mismatch");
  }

  TermMap& mutable_terms() { return terms_; }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

template <class K>
bool is_zero(const LaurentPoly<K>& p) {
  return p.is_zero();
}

// Exact quotient f / (x_u^p - m) in the Laurent ring, where m does not involve x_u.
// A nonzero remainder is an internal error.
template <class K>
LaurentPoly<K> divide_by_binomial(const LaurentPoly<K>& f, std::size_t u, int p, const LaurentPoly<K>& m) {
  f.check_vars(m);
  require(p >= 1, ErrorKind::Internal, "divide_by_binomial: power must be positive");
  LaurentPoly<K> quotient(f.vars());
  if (f.is_zero()) return quotient;
  for (const auto& [e, c] : m.terms())
    require(e[u] == 0, ErrorKind::Internal, "divide_by_binomial: m involves the division variable");
  // slice by the exponent of x_u; each slice keeps full exponent vectors with e[u] zeroed
  std::map<int, LaurentPoly<K>> slices;
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[u] = 0;
    auto it = slices.try_emplace(e[u], LaurentPoly<K>(f.vars())).first;
    it->second.add_term(rest, c);
  }
  int lo = slices.begin()->first;
  while (!slices.empty()) {
    auto top = std::prev(slices.end());
    int e = top->first;
    if (e < lo + p) break;
    LaurentPoly<K> coeff = std::move(top->second);
    slices.erase(top);
    if (coeff.is_zero()) continue;
    for (const auto& [ce, cc] : coeff.terms()) {
      Exponent qe = ce;
      qe[u] = e - p;
      quotient.add_term(qe, cc);
    }
    auto it = slices.try_emplace(e - p, LaurentPoly<K>(f.vars())).first;
    it->second += coeff * m;
  }
  for (const auto& [e, rem] : slices)
    if (!rem.is_zero()) fail(ErrorKind::Internal, "exact division left a nonzero remainder");
  return quotient;
}

}  // namespace asepk

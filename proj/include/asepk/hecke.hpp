#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "asepk/laurent.hpp"
#include "asepk/weyl.hpp"

namespace asepk {

std::vector<std::string> x_vars(int n);

// Polynomial representation of the affine type-C Hecke algebra on Laurent
// polynomials in x_1..x_n with coefficients in K. Operator images of single
// monomials are memoised, so one context should not be shared across threads.
template <class K>
class HeckeContext {
 public:
  using Poly = LaurentPoly<K>;

  HeckeContext(int n, K q, K t, K a, K b, K c, K d)
      : n_(n), q_(q), t_(t), a_(a), b_(b), c_(c), d_(d), vars_(x_vars(n)) {
    require(n >= 1, ErrorKind::Usage, "n must be at least 1");
    t0_ = checked_div(K(-(a_ * c_)), q_);
    tn_ = -(b_ * d_);
    cache_.resize(static_cast<std::size_t>(2 * (n + 1)));
  }

  int n() const { return n_; }
  const K& q() const { return q_; }
  const K& t() const { return t_; }
  const K& t0() const { return t0_; }
  const K& tn() const { return tn_; }
  const std::vector<std::string>& vars() const { return vars_; }

  // The quadratic-relation parameter of T_i.
  const K& t_param(int i) const { return i == 0 ? t0_ : (i == n_ ? tn_ : t_); }

  Poly zero() const { return Poly(vars_); }
  Poly one() const { return Poly::constant(vars_, K(Rational(1))); }
  Poly monomial(const Exponent& e) const { return Poly::monomial(vars_, e); }

  std::vector<K> spectral(const Composition& lambda) const { return spectral_values<K>(lambda, q_, t_, t0_, tn_); }

  // s_0 f = f(q/x_1, ...), s_i swaps x_i and x_{i+1}, s_n f = f(..., 1/x_n).
  Poly s(int i, const Poly& f) const {
    check_index(i);
    Poly out(vars_);
    for (const auto& [e, c] : f.terms()) {
      Exponent g = e;
      if (i == 0) {
        g[0] = -e[0];
        out.add_term(g, c * ipow(q_, e[0]));
        continue;
      }
      if (i == n_) {
        g.back() = -e.back();
      } else {
        std::swap(g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
      }
      out.add_term(g, c);
    }
    return out;
  }

  Poly T(int i, const Poly& f) const { return apply_memo(i, false, f); }
  Poly T_inverse(int i, const Poly& f) const { return apply_memo(i, true, f); }

  // T_i + (1-t)/(1-t^u), with t^u given as a field element.
  Poly baxterised(int i, const K& tu, const Poly& f) const {
    K den = K(Rational(1)) - tu;
    require(!is_zero(den), ErrorKind::Pole, "baxterised operator at t^u = 1");
    Poly out = T(i, f);
    out += f.scaled(checked_div(K(Rational(1)) - t_, den));
    return out;
  }

  // Y_i = (T_i..T_{n-1})(T_n..T_0)(T_1^{-1}..T_{i-1}^{-1}), applied right to left.
  Poly Y(int i, Poly f) const {
    require(i >= 1 && i <= n_, ErrorKind::Usage, "Y index out of range");
    for (int j = i - 1; j >= 1; --j) f = T_inverse(j, f);
    for (int j = 0; j <= n_; ++j) f = T(j, f);
    for (int j = n_ - 1; j >= i; --j) f = T(j, f);
    return f;
  }

 private:
  void check_index(int i) const { require(i >= 0 && i <= n_, ErrorKind::Usage, "Hecke generator index out of range"); }

  Poly apply_memo(int i, bool inv, const Poly& f) const {
    check_index(i);
    auto& memo = cache_[static_cast<std::size_t>(2 * i + (inv ? 1 : 0))];
    Poly out(vars_);
    for (const auto& [e, c] : f.terms()) {
      auto it = memo.find(e);
      if (it == memo.end()) it = memo.emplace(e, inv ? inverse_monomial(i, e) : direct(i, monomial(e))).first;
      out += it->second.scaled(c);
    }
    return out;
  }

  // The defining divided-difference formula; the division is exact or throws.
  Poly direct(int i, const Poly& f) const {
    Poly diff = f;
    diff -= s(i, f);
    Exponent z(static_cast<std::size_t>(n_), 0);
    if (i == 0) {
      Poly quo = divide_by_binomial(diff, 0, 2, Poly::constant(vars_, q_));
      Poly fac(vars_);
      fac.add_term(unit(0, 2), K(Rational(1)));
      fac.add_term(unit(0, 1), -(a_ + c_));
      fac.add_term(z, a_ * c_);
      Poly out = f.scaled(t0_);
      out -= fac * quo;
      return out;
    }
    if (i == n_) {
      auto u = static_cast<std::size_t>(n_ - 1);
      Poly quo = divide_by_binomial(diff, u, 2, one());
      Poly fac(vars_);
      fac.add_term(unit(u, 2), b_ * d_);
      fac.add_term(unit(u, 1), -(b_ + d_));
      fac.add_term(z, K(Rational(1)));
      Poly out = f.scaled(tn_);
      out += fac * quo;
      return out;
    }
    auto u = static_cast<std::size_t>(i - 1);
    Poly quo = divide_by_binomial(diff, u, 1, Poly::monomial(vars_, unit(u + 1, 1)));
    Poly fac(vars_);
    fac.add_term(unit(u, 1), t_);
    fac.add_term(unit(u + 1, 1), K(Rational(-1)));
    Poly out = f.scaled(t_);
    out -= fac * quo;
    return out;
  }

  // T_i^{-1} = t_i^{-1}(T_i + 1 - t_i) from the quadratic relation.
  Poly inverse_monomial(int i, const Exponent& e) const {
    const K& ti = t_param(i);
    require(!is_zero(ti), ErrorKind::Pole, "Hecke parameter is zero; T_" + std::to_string(i) + " is not invertible");
    Poly f = monomial(e);
    Poly out = T(i, f);
    out += f.scaled(K(Rational(1)) - ti);
    return out.scaled(checked_div(K(Rational(1)), ti));
  }

  Exponent unit(std::size_t idx, int power) const {
    Exponent e(static_cast<std::size_t>(n_), 0);
    e[idx] = power;
    return e;
  }

  int n_;
  K q_, t_, a_, b_, c_, d_, t0_, tn_;
  std::vector<std::string> vars_;
  mutable std::vector<std::map<Exponent, Poly>> cache_;
};

// Monomial span {x^mu : lambda >= mu}, listed in a linear extension of the order
// with lambda first.
std::vector<Composition> eigen_span(const Composition& lambda);

// Monic joint eigenfunction of Y_1..Y_n with eigenvalues y_i(lambda).
template <class K>
LaurentPoly<K> nonsymmetric_E(const Composition& lambda, const HeckeContext<K>& ctx) {
  const int n = ctx.n();
  require(static_cast<int>(lambda.size()) == n, ErrorKind::Usage, "composition length does not match n");
  std::vector<Composition> span = eigen_span(lambda);
  std::map<Exponent, std::size_t> index;
  for (std::size_t k = 0; k < span.size(); ++k) index.emplace(span[k], k);

  std::vector<std::vector<LaurentPoly<K>>> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& col = images[static_cast<std::size_t>(i - 1)];
    col.reserve(span.size());
    for (const auto& mu : span) {
      col.push_back(ctx.Y(i, ctx.monomial(mu)));
      for (const auto& [e, c] : col.back().terms()) {
        if (!index.count(e)) fail(ErrorKind::Internal, "eigen span is not closed under Y_" + std::to_string(i));
      }
    }
  }

  const std::vector<K> y = ctx.spectral(lambda);
  std::map<std::size_t, K> coef;
  coef.emplace(0, K(Rational(1)));
  for (std::size_t k = 1; k < span.size(); ++k) {
    bool solved = false;
    bool all_zero = true;
    for (int i = 0; i < n && !solved; ++i) {
      const auto& col = images[static_cast<std::size_t>(i)];
      K sum(Rational(0));
      for (const auto& [j, cj] : coef) sum = sum + col[j].coeff(span[k]) * cj;
      if (!is_zero(sum)) all_zero = false;
      K gap = y[static_cast<std::size_t>(i)] - col[k].coeff(span[k]);
      if (is_zero(gap)) continue;
      if (!is_zero(sum)) coef.emplace(k, checked_div(sum, gap));
      solved = true;
    }
    if (!solved && !all_zero) {
      fail(ErrorKind::Degenerate, "eigenvalue collision between " + to_csv(lambda) + " and " + to_csv(span[k]) +
                                      "; choose another parameter point");
    }
  }

  LaurentPoly<K> E(ctx.vars());
  for (const auto& [k, c] : coef) E.add_term(span[k], c);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly<K> res(ctx.vars());
    for (const auto& [k, c] : coef) res += images[static_cast<std::size_t>(i - 1)][k].scaled(c);
    res -= E.scaled(y[static_cast<std::size_t>(i - 1)]);
    if (!res.is_zero()) {
      fail(ErrorKind::Degenerate, "Y_" + std::to_string(i) + " residual nonzero for " + to_csv(lambda) +
                                      "; the spectrum is degenerate at this parameter point");
    }
  }
  return E;
}

template <class K>
using PolyFamily = std::map<Composition, LaurentPoly<K>>;

// Covers used to grow the family from the antidominant weight: mu -> s_i mu
// when mu_i < mu_{i+1}, mu -> s_n mu when mu_n < 0.
std::vector<std::pair<int, Composition>> family_covers(const Composition& mu);

// f_delta = E_delta; f_{s_i mu} = T_i^{-1} f_mu along covers. With
// check_paths, every cover into mu must reproduce f_mu.
template <class K>
PolyFamily<K> f_family(const Composition& lambda, const HeckeContext<K>& ctx, bool check_paths = false) {
  Composition delta = antidominant_form(lambda);
  PolyFamily<K> fam;
  fam.emplace(delta, nonsymmetric_E(delta, ctx));
  std::deque<Composition> queue{delta};
  while (!queue.empty()) {
    Composition mu = queue.front();
    queue.pop_front();
    for (const auto& [g, nu] : family_covers(mu)) {
      auto it = fam.find(nu);
      if (it == fam.end()) {
        fam.emplace(nu, ctx.T_inverse(g, fam.at(mu)));
        queue.push_back(nu);
      } else if (check_paths && !(ctx.T_inverse(g, fam.at(mu)) == it->second)) {
        fail(ErrorKind::Internal, "f-family depends on the path at " + to_csv(nu));
      }
    }
  }
  return fam;
}

// Sum over the family; asserts T_i K = t K and T_n K = t_n K.
template <class K>
LaurentPoly<K> symmetrise(const PolyFamily<K>& fam, const HeckeContext<K>& ctx) {
  LaurentPoly<K> sum(ctx.vars());
  for (const auto& [mu, f] : fam) sum += f;
  for (int i = 1; i <= ctx.n(); ++i) {
    LaurentPoly<K> res = ctx.T(i, sum);
    res -= sum.scaled(ctx.t_param(i));
    if (!res.is_zero()) fail(ErrorKind::Internal, "symmetrised family is not invariant under T_" + std::to_string(i));
  }
  return sum;
}

// Solves sum_j x_j columns[j] = target exactly; throws Degenerate if the
// columns are dependent and Internal if target is outside their span.
template <class K>
std::vector<K> solve_in_basis(const std::vector<LaurentPoly<K>>& columns, const LaurentPoly<K>& target) {
  std::map<Exponent, std::size_t> rows;
  for (const auto& p : columns) {
    for (const auto& [e, c] : p.terms()) rows.emplace(e, 0);
  }
  for (const auto& [e, c] : target.terms()) rows.emplace(e, 0);
  std::size_t r = 0;
  for (auto& [e, k] : rows) k = r++;
  const std::size_t m = columns.size();
  std::vector<std::vector<K>> A(rows.size(), std::vector<K>(m + 1, K(Rational(0))));
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& [e, c] : columns[j].terms()) A[rows.at(e)][j] = c;
  }
  for (const auto& [e, c] : target.terms()) A[rows.at(e)][m] = c;

  std::size_t row = 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = row;
    while (piv < A.size() && is_zero(A[piv][col])) ++piv;
    if (piv == A.size()) fail(ErrorKind::Degenerate, "basis polynomials are linearly dependent");
    std::swap(A[piv], A[row]);
    K inv = checked_div(K(Rational(1)), A[row][col]);
    for (auto& v : A[row]) v = v * inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || is_zero(A[i][col])) continue;
      K f = A[i][col];
      for (std::size_t j = col; j <= m; ++j) A[i][j] = A[i][j] - f * A[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < A.size(); ++i) {
    if (!is_zero(A[i][m])) fail(ErrorKind::Internal, "target is not in the span of the basis");
  }
  std::vector<K> x;
  for (std::size_t j = 0; j < m; ++j) x.push_back(A[j][m]);
  return x;
}

// Component relations satisfied by the family: T_0 f_mu = q^{mu_1} f_{s_0 mu}
// (mu_1 < -rL) or t_0 f_mu (|mu_1| <= rL); T_i f_mu = t f_mu (mu_i = mu_{i+1})
// or f_{s_i mu} (mu_i > mu_{i+1}); T_n f_mu = t_n f_mu (|mu_n| <= rR) or
// f_{s_n mu} (mu_n > rR). Returns a description of every failing relation.
template <class K>
std::vector<std::string> component_relation_failures(const PolyFamily<K>& fam, const HeckeContext<K>& ctx, int rL = 0,
                                                     int rR = 0) {
  const int n = ctx.n();
  std::vector<std::string> bad;
  auto expect = [&](int i, const Composition& mu, const LaurentPoly<K>& rhs) {
    if (!(ctx.T(i, fam.at(mu)) == rhs)) bad.push_back("T_" + std::to_string(i) + " at " + to_csv(mu));
  };
  for (const auto& [mu, f] : fam) {
    if (mu.front() < -rL) {
      Composition nu = mu;
      nu.front() = -nu.front();
      expect(0, mu, fam.at(nu).scaled(ipow(ctx.q(), mu.front())));
    } else if (std::abs(mu.front()) <= rL) {
      expect(0, mu, f.scaled(ctx.t0()));
    }
    for (int i = 1; i < n; ++i) {
      int a = mu[static_cast<std::size_t>(i - 1)], b = mu[static_cast<std::size_t>(i)];
      if (a == b) expect(i, mu, f.scaled(ctx.t()));
      if (a > b) expect(i, mu, fam.at(apply_generator(mu, i)));
    }
    if (std::abs(mu.back()) <= rR) expect(n, mu, f.scaled(ctx.tn()));
    if (mu.back() > rR) expect(n, mu, fam.at(apply_generator(mu, n)));
  }
  return bad;
}

enum class TriangularOrder { Succeq, Dominance };

// Support of E_lambda expanded over the family lies below lambda in the order.
template <class K>
bool change_of_basis_triangular(const Composition& lambda, const PolyFamily<K>& fam, const HeckeContext<K>& ctx,
                                TriangularOrder order) {
  std::vector<LaurentPoly<K>> cols;
  std::vector<Composition> keys;
  for (const auto& [mu, f] : fam) {
    keys.push_back(mu);
    cols.push_back(f);
  }
  std::vector<K> x = solve_in_basis(cols, nonsymmetric_E(lambda, ctx));
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (is_zero(x[j])) continue;
    bool below = order == TriangularOrder::Succeq ? succeq(lambda, keys[j]) : dominance_leq(keys[j], lambda);
    if (!below) return false;
  }
  return true;
}

}  // namespace asepk

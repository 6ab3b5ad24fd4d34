#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asepk/field.hpp"
#include "asepk/rational.hpp"
#include "asepk/sparse.hpp"
#include "asepk/unipoly.hpp"
#include "asepk/weyl.hpp"

namespace asepk {

// How K-matrix entries pair a negative label -i with a positive one.
enum class Convention { Magnitude, Mirror };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct ModelSpec {
  int n = 1;
  int r = 1;
  Rational t{1, 2}, a{-3}, b{-5}, c{1, 3}, d{1, 5};
  int rL = 0, rR = 0;
  Convention convention = Convention::Magnitude;

  int local_dim() const { return 2 * r + 1; }
  std::size_t config_dim() const;
  Rational t0() const { return Rational(-a * c); }
  Rational tn() const { return Rational(-b * d); }
  void validate() const;
};

struct Rates {
  Rational alpha, beta, gamma, delta;
};
Rates boundary_rates(const ModelSpec& spec);

// Boundary flip at site `pos` to `label`; label -i pairs with +partner(i).
struct BoundaryMove {
  std::size_t pos;
  int label;
  Rational rate;
};
std::vector<BoundaryMove> boundary_moves(const ModelSpec& spec, const Rates& rates, const Composition& mu);
// Solves the rate formulas for (a, c) given alpha, gamma and t (a <= c); errors
// when the roots are irrational.
std::pair<Rational, Rational> inverse_rates(const Rational& alpha, const Rational& gamma, const Rational& t);

std::size_t config_index(const Composition& mu, int r);
Composition config_from_index(std::size_t index, int n, int r);

// Positive label paired with -i.
int partner(const ModelSpec& spec, int i);

template <class S>
S lift(const Rational& v) {
  return S(v);
}

// Ř(x): identity on equal labels, b± / c± on unequal pairs.
template <class S>
SparseMatrix<S> r_check(const S& x, const S& t, int r) {
  const std::size_t D = static_cast<std::size_t>(2 * r + 1);
  SparseMatrix<S> m(D * D, {D, D});
  const S one(Rational(1));
  S bp = checked_div(t * (one - x), t - x);
  S bm = checked_div(bp, t);
  S cp = one - bp, cm = one - bm;
  for (std::size_t i = 0; i < D; ++i) m.add_to(i * D + i, i * D + i, one);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i + 1; j < D; ++j) {
      m.add_to(i * D + j, j * D + i, bp);
      m.add_to(j * D + i, i * D + j, bm);
      m.add_to(i * D + j, i * D + j, cm);
      m.add_to(j * D + i, j * D + i, cp);
    }
  return m;
}

template <class S>
SparseMatrix<S> permutation(int r) {
  const std::size_t D = static_cast<std::size_t>(2 * r + 1);
  SparseMatrix<S> m(D * D, {D, D});
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) m.add_to(i * D + j, j * D + i, S(Rational(1)));
  return m;
}

template <class S>
SparseMatrix<S> r_matrix(const S& x, const S& t, int r) {
  return permutation<S>(r) * r_check(x, t, r);
}

// Left boundary matrix; with q given, the q-deformed variant (t0 = -ac/q).
template <class S>
SparseMatrix<S> k0_matrix(const S& x, const ModelSpec& spec, const std::optional<S>& q = std::nullopt) {
  const std::size_t D = static_cast<std::size_t>(spec.local_dim());
  const S one(Rational(1));
  S a = lift<S>(spec.a), c = lift<S>(spec.c);
  S qq = q ? *q : one;
  S f = checked_div(qq - x * x, (x + a) * (x + c));
  S t0 = q ? checked_div(-(a * c), qq) : lift<S>(spec.t0());
  SparseMatrix<S> k = SparseMatrix<S>::identity(D);
  for (int i = std::max(1, spec.rL + 1); i <= spec.r; ++i) {
    auto m = static_cast<std::size_t>(spec.r - i);
    int pl = partner(spec, i);
    auto p = static_cast<std::size_t>(spec.r + pl);
    S qm = q ? ipow(qq, -i) : one;
    S qp = q ? ipow(qq, pl) : one;
    k.add_to(m, m, f * t0);
    k.add_to(p, p, f);
    k.add_to(m, p, -(f * qm));
    k.add_to(p, m, -(f * t0 * qp));
  }
  return k;
}

template <class S>
SparseMatrix<S> kn_matrix(const S& x, const ModelSpec& spec) {
  const std::size_t D = static_cast<std::size_t>(spec.local_dim());
  const S one(Rational(1));
  S b = lift<S>(spec.b), d = lift<S>(spec.d), tn = lift<S>(spec.tn());
  S f = checked_div(one - x * x, (b * x + one) * (d * x + one));
  SparseMatrix<S> k = SparseMatrix<S>::identity(D);
  for (int i = std::max(1, spec.rR + 1); i <= spec.r; ++i) {
    auto m = static_cast<std::size_t>(spec.r - i);
    auto p = static_cast<std::size_t>(spec.r + partner(spec, i));
    k.add_to(m, m, -f);
    k.add_to(p, p, -(f * tn));
    k.add_to(p, m, f);
    k.add_to(m, p, f * tn);
  }
  return k;
}

// diag(t^{-r}, ..., t^{r})
template <class S>
SparseMatrix<S> twist(const S& t, int r) {
  const std::size_t D = static_cast<std::size_t>(2 * r + 1);
  SparseMatrix<S> u(D, D);
  for (int m = -r; m <= r; ++m) u.add_to(static_cast<std::size_t>(m + r), static_cast<std::size_t>(m + r), ipow(t, m));
  return u;
}

// R~(x) = ((R(x)^{t1})^{-1})^{t1}
template <class S>
SparseMatrix<S> r_tilde(const S& x, const S& t, int r) {
  const std::size_t D = static_cast<std::size_t>(2 * r + 1);
  std::vector<std::size_t> dims{D, D};
  return partial_transpose(inverse(partial_transpose(r_matrix(x, t, r), dims, 0)), dims, 0);
}

enum class Side { Left, Right };

// Dual boundary matrices from the trace definitions, as rational functions of the
// spectral parameter. Left: Tr_2((I x K0(x)) R~(x^2) P). Right: Tr_1((Kn(1/x) x I) R~(x^2) P).
SparseMatrix<UniRatFun> dual_k_symbolic(Side side, const ModelSpec& spec);

// Closed forms (valid for rL = rR = 0); checked against the trace definitions.
template <class S>
SparseMatrix<S> dual_k_closed(Side side, const S& x, const ModelSpec& spec) {
  const int r = spec.r;
  const std::size_t D = static_cast<std::size_t>(spec.local_dim());
  const S one(Rational(1));
  S t = lift<S>(spec.t), a = lift<S>(spec.a), b = lift<S>(spec.b), c = lift<S>(spec.c), d = lift<S>(spec.d);
  auto h0 = [&](const S& z) -> S { return (z + a) * (z + c); };
  auto hn = [&](const S& z) -> S { return (b * z + one) * (d * z + one); };
  S tr = ipow(t, r), t2r1 = ipow(t, 2 * r + 1), x2 = x * x;
  SparseMatrix<S> m(D, D);
  auto at = [&](int lab) { return static_cast<std::size_t>(lab + r); };
  if (side == Side::Left) {
    S t0 = lift<S>(spec.t0());
    S kap = checked_div(ipow(t, 2 * r) * (t - x2) * h0(checked_div(x, tr)), (t2r1 - x2) * h0(x));
    S f = checked_div(ipow(t, -2 * r) * (x2 - t2r1), h0(checked_div(x, tr)));
    for (int lab = -r; lab <= r; ++lab) m.add_to(at(lab), at(lab), ipow(t, -lab));
    for (int i = 1; i <= r; ++i) {
      int p = partner(spec, i);
      m.add_to(at(-i), at(-i), -(f * t0 * ipow(t, i - 1)));
      m.add_to(at(p), at(p), -(f * ipow(t, -i)));
      m.add_to(at(-i), at(p), f);
      m.add_to(at(p), at(-i), checked_div(f * t0, t));
    }
    return m.scaled(kap);
  }
  S tn = lift<S>(spec.tn());
  S xi = checked_div(one, x);
  S kap = checked_div((t - x2) * hn(tr * xi), (t2r1 - x2) * hn(xi));
  S f = checked_div(ipow(t, -r) * (x2 - t2r1), x2 * hn(tr * xi));
  for (int lab = -r; lab <= r; ++lab) m.add_to(at(lab), at(lab), ipow(t, lab));
  for (int i = 1; i <= r; ++i) {
    int p = partner(spec, i);
    m.add_to(at(-i), at(-i), -(f * ipow(t, r - i)));
    m.add_to(at(p), at(p), -(f * ipow(t, r + i - 1) * tn));
    m.add_to(at(-i), at(p), f * ipow(t, r - 1) * tn);
    m.add_to(at(p), at(-i), f * ipow(t, r));
  }
  return m.scaled(kap);
}

template <class S>
SparseMatrix<S> evaluate(const SparseMatrix<UniRatFun>& m, const S& x) {
  return m.map([&](const UniRatFun& f) { return f.eval_at<S>(x); });
}

// Symbolic dual matrices for one model, computed once and evaluated per point.
struct DualKPair {
  SparseMatrix<UniRatFun> left, right;
  explicit DualKPair(const ModelSpec& spec)
      : left(dual_k_symbolic(Side::Left, spec)), right(dual_k_symbolic(Side::Right, spec)) {}
};

enum class TransferForm { Standard, Dual };

// T(w; x) = Tr_0[R_{0n}(w x_n)..R_{01}(w x_1) K0(w) R_{10}(w/x_1)..R_{n0}(w/x_n) K~n(w)]
// Dual:   Tr_0[R_{10}(w/x_1)..R_{n0}(w/x_n) Kn(1/w) R_{0n}(w x_n)..R_{01}(w x_1) K~0(w)]
template <class S>
SparseMatrix<S> transfer_matrix(const ModelSpec& spec, const DualKPair& duals, const S& w, const std::vector<S>& x,
                                TransferForm form = TransferForm::Standard) {
  const int n = static_cast<int>(x.size());
  require(n == spec.n, ErrorKind::Structural, "need one inhomogeneity per site");
  const std::size_t D = static_cast<std::size_t>(spec.local_dim());
  std::vector<std::size_t> dims(static_cast<std::size_t>(n + 1), D);
  std::size_t N = 1;
  for (int k = 0; k < n; ++k) N *= D;
  S t = lift<S>(spec.t);
  const S one(Rational(1));

  struct Factor {
    SparseMatrix<S> op;
    std::vector<std::size_t> pos;
  };
  std::vector<Factor> right_to_left;
  auto site = [](int j) { return static_cast<std::size_t>(j); };
  if (form == TransferForm::Standard) {
    right_to_left.push_back({evaluate(duals.right, w), {0}});
    for (int j = n; j >= 1; --j) right_to_left.push_back({r_matrix<S>(checked_div(w, x[site(j - 1)]), t, spec.r), {site(j), 0}});
    right_to_left.push_back({k0_matrix(w, spec), {0}});
    for (int j = 1; j <= n; ++j) right_to_left.push_back({r_matrix<S>(w * x[site(j - 1)], t, spec.r), {0, site(j)}});
  } else {
    right_to_left.push_back({evaluate(duals.left, w), {0}});
    for (int j = 1; j <= n; ++j) right_to_left.push_back({r_matrix<S>(w * x[site(j - 1)], t, spec.r), {0, site(j)}});
    right_to_left.push_back({kn_matrix(checked_div(one, w), spec), {0}});
    for (int j = n; j >= 1; --j) right_to_left.push_back({r_matrix<S>(checked_div(w, x[site(j - 1)]), t, spec.r), {site(j), 0}});
  }

  std::vector<std::size_t> phys(static_cast<std::size_t>(n), D);
  SparseMatrix<S> out(N, phys);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = 0; k < D; ++k) {
      SparseVector<S> v{{k * N + j, one}};
      for (const auto& f : right_to_left) {
        v = apply_local(f.op, dims, f.pos, v);
        if (v.empty()) break;
      }
      for (auto it = v.lower_bound(k * N); it != v.end() && it->first < (k + 1) * N; ++it)
        out.add_to(it->first - k * N, j, it->second);
    }
  return out;
}

// Generator from the rate table (bulk 1 / t, boundary alpha, gamma, beta, delta
// acting on labels of modulus above rL / rR).
SparseMatrix<Rational> generator_from_rates(const ModelSpec& spec);
SparseMatrix<Rational> generator_from_rates(const ModelSpec& spec, const Rates& rates);
// Bulk rates plus boundary blocks (1-t)/2 K0'(1) and -(1-t)/2 Kn'(1).
SparseMatrix<Rational> generator_from_blocks(const ModelSpec& spec);
// (1-t)/2 T'(1) with x = 1.
SparseMatrix<Rational> generator_from_transfer(const ModelSpec& spec);

}  // namespace asepk

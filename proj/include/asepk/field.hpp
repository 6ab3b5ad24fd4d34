#pragma once

#include "asepk/rational.hpp"
#include "asepk/unipoly.hpp"

namespace asepk {

template <class K>
K ipow(const K& x, long e) {
  if (e < 0) return ipow(checked_div(K(Rational(1)), x), -e);
  K out(Rational(1)), b = x;
  while (e > 0) {
    if (e & 1) out = out * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return out;
}

// Dual numbers v + d*eps with eps^2 = 0; exact first derivatives.
template <class K>
class Dual {
 public:
  Dual() : v_(Rational(0)), d_(Rational(0)) {}
  Dual(const Rational& v) : v_(v), d_(Rational(0)) {}  // NOLINT
  Dual(const K& v, const K& d) : v_(v), d_(d) {}
  static Dual variable(const K& at) { return Dual(at, K(Rational(1))); }

  const K& value() const { return v_; }
  const K& deriv() const { return d_; }

  Dual& operator+=(const Dual& o) { v_ = v_ + o.v_; d_ = d_ + o.d_; return *this; }
  Dual& operator-=(const Dual& o) { v_ = v_ - o.v_; d_ = d_ - o.d_; return *this; }
  Dual operator-() const { return Dual(-v_, -d_); }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(const Dual& a, const Dual& b) { return Dual(a.v_ * b.v_, a.v_ * b.d_ + a.d_ * b.v_); }
  friend Dual operator/(const Dual& a, const Dual& b) {
    K inv = checked_div(K(Rational(1)), b.v_);
    K v = a.v_ * inv;
    return Dual(v, (a.d_ - v * b.d_) * inv);
  }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v_ == b.v_ && a.d_ == b.d_; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

 private:
  K v_, d_;
};

template <class K>
bool is_zero(const Dual<K>& x) {
  return is_zero(x.value()) && is_zero(x.deriv());
}

template <class K>
Dual<K> checked_div(const Dual<K>& a, const Dual<K>& b) {
  return a / b;
}

}  // namespace asepk

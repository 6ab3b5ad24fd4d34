#pragma once

#include <string>
#include <vector>

#include "asepk/rational.hpp"

namespace asepk {

// Univariate Laurent polynomial over Q.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
  static UniPoly monomial(const Rational& c, int e);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  int degree() const { return is_zero() ? -1 : high(); }
  Rational coeff(int e) const;
  const Rational& lead() const { return c_.back(); }
  const Rational& trail() const { return c_.front(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly shift(int k) const;  // times x^k
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  template <class S>
  S eval_at(const S& x) const;

  // Divides by (x - 1) when x = 1 is a root; the caller checks eval(1) first.
  UniPoly divide_by_x_minus_one() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

// Polynomial division on the nonnegative part; both arguments must have low() >= 0.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quo, UniPoly& rem);
// Exact division in the Laurent ring. Throws Internal when b does not divide a.
UniPoly divexact(const UniPoly& a, const UniPoly& b);
// Monic gcd with unit powers of x removed (low() == 0, nonzero constant term).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

std::string to_string(const UniPoly& p, const std::string& var = "q");

// Element of Q(x): num / den with den monic, den(0) != 0, gcd(num, den) = 1.
class UniRatFun {
 public:
  UniRatFun() = default;
  UniRatFun(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  UniRatFun(const UniPoly& p) : num_(p), den_(Rational(1)) {}    // NOLINT
  static UniRatFun make(const UniPoly& num, const UniPoly& den);
  static UniRatFun variable() { return UniRatFun(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && (num_.is_zero() || (num_.is_monomial() && num_.low() == 0)); }
  Rational constant_value() const;

  UniRatFun& operator+=(const UniRatFun& o);
  UniRatFun& operator-=(const UniRatFun& o);
  UniRatFun& operator*=(const UniRatFun& o);
  UniRatFun& operator/=(const UniRatFun& o);
  UniRatFun operator-() const;
  friend UniRatFun operator+(UniRatFun a, const UniRatFun& b) { return a += b; }
  friend UniRatFun operator-(UniRatFun a, const UniRatFun& b) { return a -= b; }
  friend UniRatFun operator*(UniRatFun a, const UniRatFun& b) { return a *= b; }
  friend UniRatFun operator/(UniRatFun a, const UniRatFun& b) { return a /= b; }
  // Cross-multiplication; representation is canonical so this agrees with a term compare.
  friend bool operator==(const UniRatFun& a, const UniRatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const UniRatFun& a, const UniRatFun& b) { return !(a == b); }

  UniRatFun inverse() const;
  UniRatFun derivative() const;
  Rational eval(const Rational& x) const;
  template <class S>
  S eval_at(const S& x) const;
  // Value at x = 1 after cancelling common (x - 1) factors.
  Rational at_one() const;

 private:
  UniPoly num_;
  UniPoly den_ = UniPoly(Rational(1));
};

std::string to_string(const UniRatFun& f, const std::string& var = "q");

inline bool is_zero(const UniRatFun& f) { return f.is_zero(); }
inline UniRatFun checked_div(const UniRatFun& a, const UniRatFun& b) { return a / b; }
inline UniRatFun inverse(const UniRatFun& a) { return a.inverse(); }
UniRatFun pow(const UniRatFun& base, long e);

template <class S>
S UniPoly::eval_at(const S& x) const {
  S acc = S(Rational(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
  if (low_ > 0) {
    for (int k = 0; k < low_; ++k) acc = acc * x;
  } else if (low_ < 0) {
    S inv = checked_div(S(Rational(1)), x);
    for (int k = 0; k < -low_; ++k) acc = acc * inv;
  }
  return acc;
}

template <class S>
S UniRatFun::eval_at(const S& x) const {
  return checked_div(num_.eval_at(x), den_.eval_at(x));
}

}  // namespace asepk

#include "asepk/unipoly.hpp"

#include <sstream>

namespace asepk {

UniPoly::UniPoly(const Rational& c) {
  if (!asepk::is_zero(c)) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, int e) {
  UniPoly p(c);
  if (!p.is_zero()) p.low_ = e;
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && asepk::is_zero(c_.back())) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && asepk::is_zero(c_[k])) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

Rational UniPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return Rational(0);
  return c_[static_cast<std::size_t>(e - low_)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[static_cast<std::size_t>(o.low_ - low_) + k] += o.c_[k];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (asepk::is_zero(s)) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      p.c_[i + j] += tmp;
    }
  p.trim();
  return p;
}

UniPoly UniPoly::shift(int k) const {
  UniPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

UniPoly UniPoly::derivative() const {
  UniPoly p;
  if (is_zero()) return p;
  p.low_ = low_ - 1;
  p.c_.resize(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) p.c_[k] = c_[k] * (low_ + static_cast<int>(k));
  p.trim();
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  if (is_zero()) return Rational(0);
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc * asepk::pow(x, low_);
}

UniPoly UniPoly::divide_by_x_minus_one() const {
  // synthetic division by (x - 1) on the polynomial x^{-low} * this
  UniPoly p;
  if (is_zero()) return p;
  std::size_t m = c_.size();
  std::vector<Rational> q(m - 1);
  Rational carry(0);
  for (std::size_t k = m; k-- > 1;) {
    carry += c_[k];
    q[k - 1] = carry;
  }
  if (!asepk::is_zero(carry + c_[0])) fail(ErrorKind::Internal, "divide_by_x_minus_one: nonzero remainder");
  p.c_ = std::move(q);
  p.low_ = low_;
  p.trim();
  return p;
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& quo, UniPoly& rem) {
  require(!b.is_zero(), ErrorKind::Pole, "polynomial division by zero");
  require(a.is_zero() || a.low() >= 0, ErrorKind::Internal, "divmod on Laurent input");
  require(b.low() >= 0, ErrorKind::Internal, "divmod on Laurent input");
  int db = b.high();
  std::vector<Rational> r(static_cast<std::size_t>(std::max(a.degree() + 1, 0)));
  for (int e = 0; e <= a.degree(); ++e) r[static_cast<std::size_t>(e)] = a.coeff(e);
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1));
  for (int e = 0; e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
  Rational inv_lead = inverse(b.lead());
  quo = UniPoly();
  int da = a.degree();
  if (da < db) {
    rem = a;
    return;
  }
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  Rational tmp;
  for (int e = da; e >= db; --e) {
    Rational& top = r[static_cast<std::size_t>(e)];
    if (is_zero(top)) continue;
    Rational f = top * inv_lead;
    q[static_cast<std::size_t>(e - db)] = f;
    for (int k = 0; k <= db; ++k) {
      if (is_zero(bc[static_cast<std::size_t>(k)])) continue;
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), bc[static_cast<std::size_t>(k)].get_mpq_t());
      r[static_cast<std::size_t>(e - db + k)] -= tmp;
    }
  }
  UniPoly qq, rr;
  for (std::size_t k = 0; k < q.size(); ++k)
    if (!is_zero(q[k])) qq += UniPoly::monomial(q[k], static_cast<int>(k));
  for (int k = 0; k < db; ++k)
    if (!is_zero(r[static_cast<std::size_t>(k)])) rr += UniPoly::monomial(r[static_cast<std::size_t>(k)], k);
  quo = std::move(qq);
  rem = std::move(rr);
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return a;
  require(!b.is_zero(), ErrorKind::Pole, "polynomial division by zero");
  UniPoly q, r;
  divmod(a.shift(-a.low()), b.shift(-b.low()), q, r);
  require(r.is_zero(), ErrorKind::Internal, "divexact: nonzero remainder");
  return q.shift(a.low() - b.low());
}

namespace {

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * inverse(p.lead());
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.is_zero() ? a : a.shift(-a.low());
  UniPoly y = b.is_zero() ? b : b.shift(-b.low());
  if (x.is_zero()) return monic(y);
  if (y.is_zero()) return monic(x);
  if (x.degree() == 0 || y.degree() == 0) return UniPoly(Rational(1));
  if (x.degree() < y.degree()) std::swap(x, y);
  x = monic(x);
  y = monic(y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return UniPoly(Rational(1));
    UniPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = monic(r);
  }
  return x;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    Rational c = p.coeff(e);
    if (is_zero(c)) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    bool unit = a == 1;
    if (!unit || e == 0) os << to_string(a);
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

UniRatFun UniRatFun::make(const UniPoly& num, const UniPoly& den) {
  require(!den.is_zero(), ErrorKind::Pole, "rational function with zero denominator");
  UniRatFun f;
  if (num.is_zero()) return f;
  UniPoly n = num.shift(-den.low());
  UniPoly d = den.shift(-den.low());
  if (d.degree() > 0) {
    UniPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
  }
  Rational lc = asepk::inverse(d.lead());
  f.num_ = n * lc;
  f.den_ = d * lc;
  return f;
}

Rational UniRatFun::constant_value() const {
  require(is_constant(), ErrorKind::Internal, "constant_value on a non-constant");
  return num_.coeff(0);
}

UniRatFun& UniRatFun::operator+=(const UniRatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero() || den_.degree() == 0) {
      if (num_.is_zero()) den_ = UniPoly(Rational(1));
      return *this;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
    return *this;
  }
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ += o.num_;
    return *this;
  }
  UniPoly g = gcd(den_, o.den_);
  UniPoly d1 = g.degree() > 0 ? divexact(den_, g) : den_;
  UniPoly d2 = g.degree() > 0 ? divexact(o.den_, g) : o.den_;
  UniPoly n = num_ * d2 + o.num_ * d1;
  UniPoly d = d1 * o.den_;
  if (n.is_zero()) return *this = UniRatFun();
  if (g.degree() > 0) {
    UniPoly h = gcd(n, g);
    if (h.degree() > 0) {
      n = divexact(n, h);
      d = divexact(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

UniRatFun UniRatFun::operator-() const {
  UniRatFun f = *this;
  f.num_ = -f.num_;
  return f;
}

UniRatFun& UniRatFun::operator-=(const UniRatFun& o) { return *this += -o; }

UniRatFun& UniRatFun::operator*=(const UniRatFun& o) {
  if (is_zero() || o.is_zero()) return *this = UniRatFun();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  UniPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (d2.degree() > 0) {
    UniPoly g = gcd(n1, d2);
    if (g.degree() > 0) {
      n1 = divexact(n1, g);
      d2 = divexact(d2, g);
    }
  }
  if (d1.degree() > 0) {
    UniPoly g = gcd(n2, d1);
    if (g.degree() > 0) {
      n2 = divexact(n2, g);
      d1 = divexact(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  // both denominators were monic, so the product is monic
  return *this;
}

UniRatFun UniRatFun::inverse() const {
  require(!is_zero(), ErrorKind::Pole, "inverse of zero rational function");
  return make(den_, num_);
}

UniRatFun& UniRatFun::operator/=(const UniRatFun& o) { return *this *= o.inverse(); }

UniRatFun UniRatFun::derivative() const {
  return make(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational UniRatFun::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (asepk::is_zero(d)) fail(ErrorKind::Pole, "rational function evaluated at a pole");
  if (sgn(x) == 0 && num_.low() < 0) fail(ErrorKind::Pole, "negative power evaluated at zero");
  return num_.eval(x) / d;
}

Rational UniRatFun::at_one() const {
  UniPoly n = num_, d = den_;
  const Rational one(1);
  while (asepk::is_zero(d.eval(one))) {
    if (!asepk::is_zero(n.eval(one))) fail(ErrorKind::LimitUndefined, "genuine pole at 1: " + to_string(*this));
    n = n.divide_by_x_minus_one();
    d = d.divide_by_x_minus_one();
  }
  return n.eval(one) / d.eval(one);
}

UniRatFun pow(const UniRatFun& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  UniRatFun out(Rational(1)), b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return out;
}

std::string to_string(const UniRatFun& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace asepk

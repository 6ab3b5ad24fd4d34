#include "asepk/ratfun.hpp"

#include <sstream>

#include "asepk/unipoly.hpp"

namespace asepk {

namespace {

Poly one_like(const Poly& p) { return Poly::constant(p.vars(), Rational(1)); }

// Minimum exponent per variable over all terms.
Exponent min_exponents(const Poly& p) {
  Exponent lo(p.nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) lo[k] = first ? e[k] : std::min(lo[k], e[k]);
    first = false;
  }
  return lo;
}

Poly shift(const Poly& p, const Exponent& by, int sign) {
  Poly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent ne = e;
    for (std::size_t k = 0; k < e.size(); ++k) ne[k] += sign * by[k];
    out.add_term(ne, c);
  }
  return out;
}

// Index of the single variable that occurs in both polynomials, or -1 if several occur.
long single_variable(const Poly& a, const Poly& b) {
  long found = -1;
  for (const Poly* p : {&a, &b})
    for (const auto& [e, c] : p->terms())
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) {
          if (found == -1) found = static_cast<long>(k);
          else if (found != static_cast<long>(k)) return -2;
        }
  return found;
}

UniPoly to_uni(const Poly& p, std::size_t k) {
  UniPoly u;
  for (const auto& [e, c] : p.terms()) u += UniPoly::monomial(c, e[k]);
  return u;
}

Poly from_uni(const UniPoly& u, const std::vector<std::string>& vars, std::size_t k) {
  Poly p(vars);
  Exponent e(vars.size(), 0);
  for (int d = u.low(); !u.is_zero() && d <= u.high(); ++d) {
    e[k] = d;
    p.add_term(e, u.coeff(d));
  }
  return p;
}

}  // namespace

RatFun::RatFun(const Poly& num) : num_(num), den_(one_like(num)) {}

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
  num_.check_vars(den_);
  require(!den_.is_zero(), ErrorKind::Pole, "rational function with zero denominator");
  reduce();
}

bool try_divide(const Poly& a, const Poly& b, Poly& quotient) {
  a.check_vars(b);
  require(!b.is_zero(), ErrorKind::Pole, "division by zero polynomial");
  quotient = Poly(a.vars());
  if (a.is_zero()) return true;
  // work with genuine polynomials; the unit x^(la - lb) is restored at the end
  Exponent la = min_exponents(a), lb = min_exponents(b);
  Poly rem = shift(a, la, -1);
  Poly bb = shift(b, lb, -1);
  const auto& [be, bc] = *bb.terms().rbegin();  // lex-leading term
  Rational inv = inverse(bc);
  Poly q(a.vars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent qe(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) {
      qe[k] = re[k] - be[k];
      if (qe[k] < 0) return false;
    }
    Poly step = Poly::monomial(a.vars(), qe, rc * inv);
    q += step;
    rem -= step * bb;
  }
  Exponent d(la.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = la[k] - lb[k];
  quotient = shift(q, d, 1);
  return true;
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = one_like(num_);
    return;
  }
  // monomial content of the denominator is a unit
  Exponent lo = min_exponents(den_);
  den_ = shift(den_, lo, -1);
  num_ = shift(num_, lo, -1);
  if (den_.size() == 1) {
    const auto& [e, c] = *den_.terms().begin();
    num_ = shift(num_, e, -1).scaled(inverse(c));
    den_ = one_like(num_);
    return;
  }
  long k = single_variable(num_, den_);
  if (k >= 0) {
    auto idx = static_cast<std::size_t>(k);
    UniRatFun f = UniRatFun::make(to_uni(num_, idx), to_uni(den_, idx));
    num_ = from_uni(f.num(), num_.vars(), idx);
    den_ = from_uni(f.den(), num_.vars(), idx);
    return;
  }
  Poly q;
  if (try_divide(num_, den_, q)) {
    num_ = q;
    den_ = one_like(num_);
    return;
  }
  Rational lc = inverse(den_.terms().rbegin()->second);
  num_ = num_.scaled(lc);
  den_ = den_.scaled(lc);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_.check_vars(o.num_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  require(!o.is_zero(), ErrorKind::Pole, "division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.vars() != b.vars()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Poly substitute(const Poly& f, const std::map<std::string, Binding>& bindings) {
  Poly out = f;
  for (const auto& [name, value] : bindings) {
    std::size_t idx = out.var_index(name);
    if (std::holds_alternative<Rational>(value)) {
      const Rational& v = std::get<Rational>(value);
      Poly next(out.vars());
      for (const auto& [e, c] : out.terms()) {
        if (e[idx] < 0 && is_zero(v)) fail(ErrorKind::Pole, "zero substituted into a negative power of " + name);
        Exponent ne = e;
        ne[idx] = 0;
        next.add_term(ne, c * pow(v, e[idx]));
      }
      out = std::move(next);
    } else {
      out = out.substitute(idx, std::get<Poly>(value));
    }
  }
  return out;
}

namespace {

// Substitution into a rational function: powers of a general polynomial value are
// split into numerator and denominator parts.
RatFun substitute_one(const RatFun& f, const std::string& name, const Binding& value) {
  if (std::holds_alternative<Rational>(value)) {
    std::map<std::string, Binding> b{{name, value}};
    Poly n = substitute(f.num(), b);
    Poly d = substitute(f.den(), b);
    if (d.is_zero()) fail(ErrorKind::Pole, "substitution hits a pole of the denominator");
    return RatFun(n, d);
  }
  const Poly& v = std::get<Poly>(value);
  std::size_t idx = f.num().var_index(name);
  auto lift = [&](const Poly& p) {
    int lo = std::min(0, p.exponent_range(idx).first);
    // p = x^lo * P with P free of negative powers of x; substitute into P, divide by v^{-lo}
    Poly shifted(p.vars());
    for (const auto& [e, c] : p.terms()) {
      Exponent ne = e;
      ne[idx] -= lo;
      shifted.add_term(ne, c);
    }
    return std::make_pair(shifted.substitute(idx, v), -lo);
  };
  auto [n, kn] = lift(f.num());
  auto [d, kd] = lift(f.den());
  // f = n / v^kn / (d / v^kd) = n v^kd / (d v^kn)
  Poly nn = n * v.power(kd);
  Poly dd = d * v.power(kn);
  if (dd.is_zero()) fail(ErrorKind::Pole, "substitution hits a pole of the denominator");
  return RatFun(nn, dd);
}

}  // namespace

RatFun substitute(const RatFun& f, const std::map<std::string, Binding>& bindings) {
  RatFun out = f;
  for (const auto& [name, value] : bindings) out = substitute_one(out, name, value);
  return out;
}

RatFun derivative(const RatFun& f, const std::string& var) {
  std::size_t idx = f.num().var_index(var);
  Poly n = f.num().derivative(idx) * f.den() - f.num() * f.den().derivative(idx);
  return RatFun(n, f.den() * f.den());
}

RatFun specialise_at_one(const RatFun& f, const std::string& var) {
  std::size_t idx = f.num().var_index(var);
  Poly n = f.num(), d = f.den();
  std::map<std::string, Binding> at1{{var, Rational(1)}};
  Poly m = Poly::constant(n.vars(), Rational(1));
  while (substitute(d, at1).is_zero()) {
    if (!substitute(n, at1).is_zero()) fail(ErrorKind::LimitUndefined, "genuine pole at " + var + " = 1");
    n = divide_by_binomial(n, idx, 1, m);
    d = divide_by_binomial(d, idx, 1, m);
  }
  return RatFun(substitute(n, at1), substitute(d, at1));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    bool printed = false;
    if (a != 1 || constant) {
      os << to_string(a);
      printed = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (printed) os << "*";
      os << p.vars()[k];
      if (e[k] != 1) os << "^" << e[k];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const RatFun& f) {
  if (f.den() == Poly::constant(f.vars(), Rational(1))) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace asepk

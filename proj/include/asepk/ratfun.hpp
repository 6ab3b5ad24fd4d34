#pragma once

#include <map>
#include <string>
#include <variant>

#include "asepk/laurent.hpp"

namespace asepk {

using Poly = LaurentPoly<Rational>;

// Multivariate rational function num/den over Q. Reduction is best-effort:
// units (monomials, scalars) are normalised away, a univariate gcd is taken when
// only one variable occurs, and an exact multivariate quotient is used when den | num.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(const Poly& num);
  RatFun(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  void reduce();
  Poly num_, den_;
};

using Binding = std::variant<Rational, Poly>;

Poly substitute(const Poly& f, const std::map<std::string, Binding>& bindings);
RatFun substitute(const RatFun& f, const std::map<std::string, Binding>& bindings);

RatFun derivative(const RatFun& f, const std::string& var);

// Value at var = 1 after cancelling common (var - 1) factors. The result keeps the
// variable list; var no longer occurs.
RatFun specialise_at_one(const RatFun& f, const std::string& var = "q");

// Exact multivariate quotient a / b when it exists (lex division), else nullopt semantics via bool.
bool try_divide(const Poly& a, const Poly& b, Poly& quotient);

std::string to_string(const Poly& p);
std::string to_string(const RatFun& f);

}  // namespace asepk

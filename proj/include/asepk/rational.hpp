#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "asepk/errors.hpp"

namespace asepk {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q". Throws Usage on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);

inline Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::Pole, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

Rational pow(const Rational& base, long e);

inline Rational checked_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) fail(ErrorKind::Pole, "division by zero");
  return Rational(a / b);
}

inline Rational inverse(const Rational& a) { return checked_div(Rational(1), a); }

}  // namespace asepk

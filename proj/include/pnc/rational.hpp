#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pnc/error.hpp"

namespace pnc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

inline Rational rat(long long n, long long d = 1) {
  if (d == 0) fail(Errc::InconsistentInput, "rational with zero denominator");
  return Rational(Integer(n), Integer(d));
}

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline Integer floor_int(const Rational& q) {
  Integer n = rat_num(q), d = rat_den(q);
  Integer t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Integer ceil_int(const Rational& q) { return -floor_int(-q); }

// base^e with e possibly negative (base must be non-zero then)
inline Rational pow_rat(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) fail(Errc::InconsistentInput, "zero to a negative power");
    return Rational(0);
  }
  Rational b = base;
  bool inv = e < 0;
  unsigned long long k = inv ? static_cast<unsigned long long>(-(e + 1)) + 1
                             : static_cast<unsigned long long>(e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) acc = Rational(1) / acc;
  return acc;
}

inline long long to_ll(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    fail(Errc::InternalError, "integer out of 64-bit range");
  return v.convert_to<long long>();
}

inline long long to_ll(const Rational& q) {
  if (!is_integer(q)) fail(Errc::NonIntegralDegree, "expected an integer value");
  return to_ll(rat_num(q));
}

}  // namespace pnc

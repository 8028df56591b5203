#pragma once

#include <map>
#include <vector>

#include "pnc/rational.hpp"

namespace pnc {

struct XYExp {
  long long ex = 0;
  long long ey = 0;
  bool operator==(const XYExp&) const = default;
};

// Highest y-power first, then highest x-power; fixes serialization order.
struct XYOrder {
  bool operator()(const XYExp& a, const XYExp& b) const {
    if (a.ey != b.ey) return a.ey > b.ey;
    return a.ex > b.ex;
  }
};

struct PolyDegrees {
  long long deg_y = 0;
  long long max_ex = 0;
  long long min_ex = 0;
};

// Element of Q[x, x^-1, y]: only x may carry negative exponents.
class LaurentPoly {
 public:
  using TermMap = std::map<XYExp, Rational, XYOrder>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly x(long long e = 1);
  static LaurentPoly y(long long e = 1);
  static LaurentPoly monomial(const Rational& c, long long ex, long long ey);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(long long ex, long long ey, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(long long e) const;  // NegativePower if e < 0

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  PolyDegrees degrees() const;  // ZeroPolynomial on 0
  bool is_polynomial() const;   // true iff no negative x exponent (or zero)
  LaurentPoly dy() const;       // formal d/dy

  // Coefficient of y^e, a Laurent polynomial in x alone.
  LaurentPoly y_coefficient(long long e) const;

 private:
  TermMap terms_;
};

struct LaurentDivRem {
  LaurentPoly quot;
  LaurentPoly rem;
};

// Division by a divisor monic in y (leading y-coefficient is the constant 1).
LaurentDivRem divide_by_y_monic(const LaurentPoly& f, const LaurentPoly& divisor);

}  // namespace pnc

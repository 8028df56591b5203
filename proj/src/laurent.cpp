#include "pnc/laurent.hpp"

#include <algorithm>

namespace pnc {

LaurentPoly LaurentPoly::constant(const Rational& c) {
  return monomial(c, 0, 0);
}

LaurentPoly LaurentPoly::x(long long e) { return monomial(Rational(1), e, 0); }

LaurentPoly LaurentPoly::y(long long e) { return monomial(Rational(1), 0, e); }

LaurentPoly LaurentPoly::monomial(const Rational& c, long long ex, long long ey) {
  LaurentPoly p;
  p.add_term(ex, ey, c);
  return p;
}

void LaurentPoly::add_term(long long ex, long long ey, const Rational& c) {
  if (c == 0) return;
  if (ey < 0)
    fail(Errc::InconsistentInput, "y exponents must be non-negative");
  XYExp key{ex, ey};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e.ex, e.ey, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e.ex, e.ey, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.add_term(ea.ex + eb.ex, ea.ey + eb.ey, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::pow(long long e) const {
  if (e < 0) fail(Errc::NegativePower, "polynomial power must be >= 0");
  if (e == 1) return *this;
  LaurentPoly acc = constant(Rational(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

PolyDegrees LaurentPoly::degrees() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "degrees of the zero polynomial");
  PolyDegrees d;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first) {
      d.deg_y = e.ey;
      d.max_ex = d.min_ex = e.ex;
      first = false;
    } else {
      d.deg_y = std::max(d.deg_y, e.ey);
      d.max_ex = std::max(d.max_ex, e.ex);
      d.min_ex = std::min(d.min_ex, e.ex);
    }
  }
  return d;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (e.ex < 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::dy() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    if (e.ey > 0) out.add_term(e.ex, e.ey - 1, c * Rational(e.ey));
  return out;
}

LaurentPoly LaurentPoly::y_coefficient(long long e) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_)
    if (k.ey == e) out.add_term(k.ex, 0, c);
  return out;
}

LaurentDivRem divide_by_y_monic(const LaurentPoly& f, const LaurentPoly& divisor) {
  if (divisor.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
  PolyDegrees dd = divisor.degrees();
  LaurentPoly lead = divisor.y_coefficient(dd.deg_y);
  if (!(lead.term_count() == 1 && lead.terms().begin()->first.ex == 0 &&
        lead.terms().begin()->second == 1))
    fail(Errc::InternalError, "divisor is not monic in y");

  LaurentDivRem out;
  out.rem = f;
  while (!out.rem.is_zero()) {
    PolyDegrees rd = out.rem.degrees();
    if (rd.deg_y < dd.deg_y) break;
    LaurentPoly digit = out.rem.y_coefficient(rd.deg_y);
    LaurentPoly shift;
    for (const auto& [k, c] : digit.terms())
      shift.add_term(k.ex, rd.deg_y - dd.deg_y, c);
    out.quot = out.quot + shift;
    out.rem = out.rem - shift * divisor;
  }
  return out;
}

}  // namespace pnc

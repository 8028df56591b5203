#include "pnc/keyforms.hpp"

#include <algorithm>

namespace pnc {

KeyFormSet build_key_forms(const KeySequence& omega, const ThetaVector& theta) {
  if (!is_key_sequence(omega.w))
    fail(Errc::InvalidKeySequence, "build_key_forms requires a key sequence");
  if (static_cast<int>(theta.size()) != omega.n())
    fail(Errc::ThetaLengthMismatch, "need exactly n theta values");
  for (const Rational& t : theta)
    if (t == 0) fail(Errc::InconsistentInput, "theta entries must be non-zero");

  KeyFormSet kf;
  kf.omega = omega;
  kf.ladder = gcd_ladder(omega);
  kf.theta = theta;
  kf.g.push_back(LaurentPoly::x());
  kf.g.push_back(LaurentPoly::y());
  for (int k = 1; k <= omega.n(); ++k) {
    BoundedRep rep = bounded_representation(omega, k);
    LaurentPoly mono = LaurentPoly::constant(Rational(1));
    for (int j = 0; j < k; ++j) {
      long long b = rep.beta[static_cast<size_t>(j)];
      if (j == 0) {
        mono = mono * LaurentPoly::x(b);  // beta_{k,0} may be negative
      } else {
        mono = mono * kf.g[static_cast<size_t>(j)].pow(b);
      }
    }
    LaurentPoly next = kf.g[static_cast<size_t>(k)].pow(kf.ladder.alpha(k)) -
                       mono.scaled(theta[static_cast<size_t>(k - 1)]);
    kf.g.push_back(next);
  }

  // deg_y(g_k) = alpha_1 ... alpha_{k-1}; each g_k is monic in y.
  long long expected = 1;
  for (int k = 1; k <= omega.n() + 1; ++k) {
    PolyDegrees d = kf.g[static_cast<size_t>(k)].degrees();
    if (d.deg_y != expected)
      fail(Errc::InternalError, "key form has unexpected y-degree");
    LaurentPoly lead = kf.g[static_cast<size_t>(k)].y_coefficient(d.deg_y);
    if (!(lead.term_count() == 1 && lead.terms().begin()->first.ex == 0 &&
          lead.terms().begin()->second == 1))
      fail(Errc::InternalError, "key form is not monic in y");
    if (k <= omega.n()) expected *= kf.ladder.alpha(k);
  }
  return kf;
}

namespace {

// Expands f (deg_y < alpha_1...alpha_level) over g_1..g_level, appending the
// resulting digits to prefix.  Base case writes pure x-monomials.
void expand_recursive(const LaurentPoly& f, const KeyFormSet& kf, int level,
                      std::vector<long long>& suffix, BasisExpansion& out) {
  if (f.is_zero()) return;
  if (level == 0) {
    for (const auto& [e, c] : f.terms()) {
      if (e.ey != 0) fail(Errc::InternalError, "residue depends on y");
      std::vector<long long> beta;
      beta.reserve(suffix.size() + 1);
      beta.push_back(e.ex);
      beta.insert(beta.end(), suffix.rbegin(), suffix.rend());
      out.terms[beta] += c;
      if (out.terms[beta] == 0) out.terms.erase(beta);
    }
    return;
  }
  // g_level-adic digits; deg_y(f) < alpha_1..alpha_level keeps every digit
  // power below alpha_level automatically.
  const LaurentPoly& g = kf.g[static_cast<size_t>(level)];
  LaurentPoly rest = f;
  long long power = 0;
  while (!rest.is_zero()) {
    LaurentDivRem dr = divide_by_y_monic(rest, g);
    if (!dr.rem.is_zero()) {
      suffix.push_back(power);
      expand_recursive(dr.rem, kf, level - 1, suffix, out);
      suffix.pop_back();
    }
    rest = dr.quot;
    ++power;
  }
  if (level <= kf.n() && power > kf.ladder.alpha(level))
    fail(Errc::InternalError, "basis digit exceeded alpha bound");
}

}  // namespace

BasisExpansion basis_expand(const LaurentPoly& f, const KeyFormSet& kf) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot expand the zero polynomial");
  BasisExpansion out;
  std::vector<long long> suffix;
  // Top level: digits in g_{n+1}, unbounded power.
  const LaurentPoly& top = kf.g.back();
  LaurentPoly rest = f;
  long long power = 0;
  while (!rest.is_zero()) {
    LaurentDivRem dr = divide_by_y_monic(rest, top);
    if (!dr.rem.is_zero()) {
      suffix.push_back(power);
      expand_recursive(dr.rem, kf, kf.n(), suffix, out);
      suffix.pop_back();
    }
    rest = dr.quot;
    ++power;
  }
  return out;
}

LaurentPoly evaluate_expansion(const BasisExpansion& e, const KeyFormSet& kf) {
  LaurentPoly acc;
  for (const auto& [beta, c] : e.terms) {
    LaurentPoly term = LaurentPoly::x(beta[0]);
    for (size_t j = 1; j < beta.size(); ++j)
      term = term * kf.g[j].pow(beta[j]);
    acc = acc + term.scaled(c);
  }
  return acc;
}

long long weight_of(const std::vector<long long>& beta, const KeySequence& omega) {
  long long w = 0;
  for (size_t j = 0; j < beta.size(); ++j) w += beta[j] * omega.w[j];
  return w;
}

long long semidegree(const LaurentPoly& f, const KeyFormSet& kf) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "semidegree undefined at 0");
  BasisExpansion e = basis_expand(f, kf);
  bool first = true;
  long long best = 0;
  for (const auto& [beta, c] : e.terms) {
    (void)c;
    long long w = weight_of(beta, kf.omega);
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

const char* to_string(CompactificationClass c) {
  switch (c) {
    case CompactificationClass::none: return "none";
    case CompactificationClass::analytic_only: return "analytic_only";
    case CompactificationClass::algebraic: return "algebraic";
  }
  return "?";
}

CompactificationClass compactification_class(const KeyFormSet& kf) {
  if (kf.omega.last() <= 0) return CompactificationClass::none;
  if (kf.g.back().is_polynomial()) {
    // When the class is algebraic every key form must be a polynomial.
    for (const LaurentPoly& g : kf.g)
      if (!g.is_polynomial())
        fail(Errc::InternalError, "last key form polynomial but an earlier one is not");
    return CompactificationClass::algebraic;
  }
  return CompactificationClass::analytic_only;
}

}  // namespace pnc

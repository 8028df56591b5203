#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pnc/keyforms.hpp"

namespace pnc {

// Finite degree-wise Puiseux polynomial phi(x) = sum a_beta x^beta plus the
// generic tail xi * x^r.  Invariant: r < beta for every stored exponent;
// contributions at or below r are meaningless and get dropped.
struct GenericSeries {
  std::map<Rational, Rational> body;
  Rational r;
};

// Builds a canonical series: drops zero coefficients and exponents <= r.
GenericSeries make_series(std::map<Rational, Rational> body, Rational r);

// Validating variant for external input: rejects instead of dropping.
GenericSeries parse_series(const std::map<Rational, Rational>& body, const Rational& r);

struct FormalPairs {
  // (q_1,p_1),...,(q_{l+1},p_{l+1}); p_k >= 2 for k <= l, p_{l+1} >= 1.
  std::vector<std::pair<long long, long long>> qp;

  int l() const { return static_cast<int>(qp.size()) - 1; }
  long long delta_x() const;  // p_1 ... p_{l+1}
};

struct XiExp {
  long long xi = 0;
  Rational xexp;
  bool operator==(const XiExp&) const = default;
};

struct XiOrder {
  bool operator()(const XiExp& a, const XiExp& b) const {
    if (a.xexp != b.xexp) return a.xexp > b.xexp;
    return a.xi < b.xi;
  }
};

// Polynomial in xi with exact rational x-exponents; the image of a Laurent
// polynomial under y = phi(x) + xi x^r.
class XiPoly {
 public:
  using TermMap = std::map<XiExp, Rational, XiOrder>;

  static XiPoly zero() { return XiPoly(); }
  static XiPoly term(const Rational& c, long long xi, const Rational& xexp);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(long long xi, const Rational& xexp, const Rational& c);
  XiPoly operator+(const XiPoly& o) const;
  XiPoly operator-(const XiPoly& o) const;
  XiPoly operator*(const XiPoly& o) const;
  XiPoly scaled(const Rational& c) const;
  XiPoly pow(long long e) const;

  Rational max_x_exponent() const;  // ZeroPolynomial on 0

  // Coefficient of xi^k x^e.
  Rational coefficient(long long xi, const Rational& xexp) const;

  // All terms at the maximal x-exponent, as a polynomial in xi
  // (xi-power -> coefficient).
  std::map<long long, Rational> leading_slice() const;

 private:
  TermMap terms_;
};

long long polydromy(const GenericSeries& s);  // of the body
long long delta_x(const GenericSeries& s);    // p_1...p_{l+1}

XiPoly substitute(const LaurentPoly& f, const GenericSeries& s);

long long semidegree_via_series(const LaurentPoly& f, const GenericSeries& s);

FormalPairs formal_pairs(const GenericSeries& s);

// Rebuilds the formal Puiseux pairs from a key sequence alone: the alphas at
// essential indices are the p's and the iterated pole formula yields the q's.
FormalPairs formal_pairs_from_key_sequence(const KeySequence& omega);

long long delta_last_key(const FormalPairs& fp);

struct SeriesKeyData {
  KeySequence omega;
  ThetaVector theta;
  KeyFormSet kf;
  // Leading xi-free coefficient c_j of g_j under substitution, j = 0..n.
  std::vector<Rational> lead;
  // Lowest-order xi coefficient at the leading exponent of the last form.
  // Usually the leading slice is exactly c_{n+1} xi; a body term can also
  // contribute a xi-free part at the same exponent.
  Rational last_lead;
};

SeriesKeyData key_data_from_series(const GenericSeries& s);

// x' = a^{omega_0} x + b, y' = c y + f(x); the scaling convention on
// coefficients is a_beta -> c a^{-omega_0 beta} a_beta.
struct CoordinateChange {
  Rational a{1};
  Rational c{1};
  std::map<long long, Rational> f;  // polynomial f(x), exponent -> coefficient
  Rational b{0};
};

GenericSeries coordinate_change(const GenericSeries& s, const CoordinateChange& t,
                                bool enforce_admissible = true);

}  // namespace pnc

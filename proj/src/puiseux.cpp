#include "pnc/puiseux.hpp"

#include <algorithm>
#include <numeric>

namespace pnc {

GenericSeries make_series(std::map<Rational, Rational> body, Rational r) {
  GenericSeries s;
  s.r = std::move(r);
  for (auto& [e, c] : body)
    if (c != 0 && e > s.r) s.body.emplace(e, c);
  return s;
}

GenericSeries parse_series(const std::map<Rational, Rational>& body, const Rational& r) {
  for (const auto& [e, c] : body) {
    if (c == 0)
      fail(Errc::InconsistentInput, "series body stores a zero coefficient");
    if (e <= r)
      fail(Errc::InconsistentInput,
           "series body exponent at or below the generic exponent r");
  }
  GenericSeries s;
  s.body = body;
  s.r = r;
  return s;
}

long long FormalPairs::delta_x() const {
  long long p = 1;
  for (const auto& [q, pk] : qp) {
    (void)q;
    p *= pk;
  }
  return p;
}

XiPoly XiPoly::term(const Rational& c, long long xi, const Rational& xexp) {
  XiPoly out;
  out.add_term(xi, xexp, c);
  return out;
}

void XiPoly::add_term(long long xi, const Rational& xexp, const Rational& c) {
  if (c == 0) return;
  if (xi < 0) fail(Errc::InternalError, "negative xi power");
  XiExp key{xi, xexp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

XiPoly XiPoly::operator+(const XiPoly& o) const {
  XiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e.xi, e.xexp, c);
  return out;
}

XiPoly XiPoly::operator-(const XiPoly& o) const {
  XiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e.xi, e.xexp, -c);
  return out;
}

XiPoly XiPoly::operator*(const XiPoly& o) const {
  XiPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      out.add_term(ea.xi + eb.xi, ea.xexp + eb.xexp, ca * cb);
  return out;
}

XiPoly XiPoly::scaled(const Rational& c) const {
  XiPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

XiPoly XiPoly::pow(long long e) const {
  if (e < 0) fail(Errc::NegativePower, "xi-polynomial power must be >= 0");
  if (e == 1) return *this;
  XiPoly acc = term(Rational(1), 0, Rational(0));
  XiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Rational XiPoly::max_x_exponent() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "max exponent of zero");
  return terms_.begin()->first.xexp;
}

Rational XiPoly::coefficient(long long xi, const Rational& xexp) const {
  auto it = terms_.find(XiExp{xi, xexp});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::map<long long, Rational> XiPoly::leading_slice() const {
  std::map<long long, Rational> out;
  if (is_zero()) return out;
  Rational top = terms_.begin()->first.xexp;
  for (const auto& [e, c] : terms_) {
    if (e.xexp != top) break;
    out[e.xi] = c;
  }
  return out;
}

long long polydromy(const GenericSeries& s) {
  long long p = 1;
  for (const auto& [e, c] : s.body) {
    (void)c;
    p = std::lcm(p, to_ll(rat_den(e)));
  }
  return p;
}

FormalPairs formal_pairs(const GenericSeries& s) {
  FormalPairs fp;
  long long dcur = 1;  // polydromy of the part scanned so far
  for (auto it = s.body.rbegin(); it != s.body.rend(); ++it) {
    const Rational& beta = it->first;
    Rational scaled = beta * Rational(dcur);
    long long pk = to_ll(rat_den(scaled));
    if (pk == 1) continue;  // not a characteristic exponent
    long long qk = to_ll(rat_num(scaled));
    fp.qp.emplace_back(qk, pk);
    dcur *= pk;
  }
  Rational scaled_r = s.r * Rational(dcur);
  long long pl1 = to_ll(rat_den(scaled_r));
  long long ql1 = to_ll(rat_num(scaled_r));
  fp.qp.emplace_back(ql1, pl1);
  return fp;
}

long long delta_x(const GenericSeries& s) { return formal_pairs(s).delta_x(); }

namespace {

std::vector<XiPoly> series_power_cache(const GenericSeries& s, long long max_pow) {
  XiPoly ytilde;
  for (const auto& [e, c] : s.body) ytilde.add_term(0, e, c);
  ytilde.add_term(1, s.r, Rational(1));
  std::vector<XiPoly> pows;
  pows.push_back(XiPoly::term(Rational(1), 0, Rational(0)));
  for (long long k = 1; k <= max_pow; ++k) pows.push_back(pows.back() * ytilde);
  return pows;
}

}  // namespace

XiPoly substitute(const LaurentPoly& f, const GenericSeries& s) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot substitute into 0");
  long long maxy = f.degrees().deg_y;
  std::vector<XiPoly> pows = series_power_cache(s, maxy);
  XiPoly out;
  for (const auto& [e, c] : f.terms()) {
    XiPoly t = pows[static_cast<size_t>(e.ey)].scaled(c);
    for (const auto& [k, v] : t.terms())
      out.add_term(k.xi, k.xexp + Rational(e.ex), v);
  }
  return out;
}

long long semidegree_via_series(const LaurentPoly& f, const GenericSeries& s) {
  XiPoly sub = substitute(f, s);
  if (sub.is_zero())
    fail(Errc::InternalError, "substitution vanished identically");
  Rational d = Rational(delta_x(s)) * sub.max_x_exponent();
  if (!is_integer(d))
    fail(Errc::NonIntegralDegree, "series yields a non-integral degree");
  return to_ll(rat_num(d));
}

long long delta_last_key(const FormalPairs& fp) {
  int l = fp.l();
  Rational acc(fp.qp.back().first);  // q_{l+1}
  Rational phead(1);
  for (int k = 1; k <= l; ++k) phead *= Rational(fp.qp[static_cast<size_t>(k - 1)].second);
  // p_1...p_l * sum_k (p_k-1) p_{k+1}...p_{l+1} q_k / (p_1...p_k)
  Rational tailprod(1);
  for (int k = 1; k <= l + 1; ++k) tailprod *= Rational(fp.qp[static_cast<size_t>(k - 1)].second);
  Rational sum(0);
  Rational prefix(1);
  for (int k = 1; k <= l; ++k) {
    long long pk = fp.qp[static_cast<size_t>(k - 1)].second;
    long long qk = fp.qp[static_cast<size_t>(k - 1)].first;
    prefix *= Rational(pk);  // p_1...p_k
    Rational suffix = tailprod / prefix;  // p_{k+1}...p_{l+1}
    sum += Rational(pk - 1) * suffix * Rational(qk) / prefix;
  }
  acc += phead * sum;
  if (!is_integer(acc))
    fail(Errc::InconsistentInput, "formal pairs give a non-integral pole");
  return to_ll(rat_num(acc));
}

FormalPairs formal_pairs_from_key_sequence(const KeySequence& omega) {
  require_key(omega);
  GcdLadder lad = gcd_ladder(omega);
  EssentialSubsequence ess = essential_subsequence(omega);
  const std::vector<int>& idx = ess.indices;
  int l = static_cast<int>(idx.size()) - 2;  // essential interior count
  std::vector<long long> p(static_cast<size_t>(l) + 1);
  for (int k = 1; k <= l; ++k) p[static_cast<size_t>(k - 1)] = lad.alpha(idx[static_cast<size_t>(k)]);
  p[static_cast<size_t>(l)] = lad.alpha(omega.n() + 1);

  FormalPairs fp;
  long long running = 0;  // sum_{j<k} (p_j - 1) omega_{i_j}
  for (int k = 1; k <= l + 1; ++k) {
    long long later = 1;
    for (int j = k + 1; j <= l + 1; ++j) later *= p[static_cast<size_t>(j - 1)];
    long long wk = omega[idx[static_cast<size_t>(k)]];
    long long numer = wk - running;
    if (numer % later != 0)
      fail(Errc::InternalError, "key sequence does not yield integral Puiseux data");
    long long qk = numer / later;
    long long pk = p[static_cast<size_t>(k - 1)];
    if (std::gcd(std::abs(qk), pk) != 1)
      fail(Errc::InternalError, "derived Puiseux pair is not coprime");
    fp.qp.emplace_back(qk, pk);
    if (k <= l) running += (pk - 1) * wk;
  }
  if (fp.delta_x() != omega[0])
    fail(Errc::InternalError, "pair product does not match omega_0");
  return fp;
}

SeriesKeyData key_data_from_series(const GenericSeries& s) {
  GenericSeries cs = make_series(s.body, s.r);
  long long p = delta_x(cs);

  SeriesKeyData out;
  out.omega.w.push_back(p);
  out.lead.push_back(Rational(1));  // c_0: x substitutes to x

  std::vector<XiPoly> sub;
  sub.push_back(XiPoly::term(Rational(1), 0, Rational(1)));  // x
  {
    XiPoly ytilde;
    for (const auto& [e, c] : cs.body) ytilde.add_term(0, e, c);
    ytilde.add_term(1, cs.r, Rational(1));
    sub.push_back(ytilde);
  }

  std::vector<LaurentPoly> g;
  g.push_back(LaurentPoly::x());
  g.push_back(LaurentPoly::y());

  GcdLadder lad;
  lad.d.push_back(p);

  for (int k = 1;; ++k) {
    if (k > 4096)
      fail(Errc::InternalError, "key form iteration failed to terminate");
    const XiPoly& cur = sub[static_cast<size_t>(k)];
    if (cur.is_zero())
      fail(Errc::InternalError, "key form substitutes to zero");
    std::map<long long, Rational> slice = cur.leading_slice();
    Rational e = cur.max_x_exponent();
    Rational wk_rat = Rational(p) * e;
    if (!is_integer(wk_rat))
      fail(Errc::InternalError, "leading exponent not in (1/p)Z");
    long long wk = to_ll(rat_num(wk_rat));

    if (slice.rbegin()->first > 0) {
      // Tail reached: the leading coefficient involves xi, and no theta can
      // push the cancellation further (the subtracted monomial substitutes
      // to a xi-free leading term, so it can only clear the xi-free part and
      // the exponent would stop dropping).  The xi-free part may be non-zero
      // here: a body term at the right exponent can sit at the same level.
      auto it = slice.begin();
      if (it->first == 0) ++it;
      out.omega.w.push_back(wk);
      out.last_lead = it->second;
      break;
    }

    Rational ck = slice.begin()->second;
    out.omega.w.push_back(wk);
    out.lead.push_back(ck);

    long long dk = std::gcd(lad.d.back(), std::abs(wk));
    lad.alpha_.push_back(lad.d.back() / dk);
    lad.d.push_back(dk);
    long long ak = lad.alpha(k);

    std::vector<long long> rep =
        rep_over_prefix(out.omega, lad, k - 1, ak * wk);

    // theta_k cancels the xi-free leading terms of g_k^{alpha_k} against the
    // monomial prod g_j^{beta_{k,j}}.
    Rational mono_lead(1);
    for (int j = 1; j < k; ++j)
      mono_lead *= pow_rat(out.lead[static_cast<size_t>(j)], rep[static_cast<size_t>(j)]);
    Rational theta_k = pow_rat(ck, ak) / mono_lead;
    out.theta.push_back(theta_k);

    XiPoly mono = XiPoly::term(Rational(1), 0, Rational(rep[0]));
    for (int j = 1; j < k; ++j)
      mono = mono * sub[static_cast<size_t>(j)].pow(rep[static_cast<size_t>(j)]);
    XiPoly next = cur.pow(ak) - mono.scaled(theta_k);
    if (!next.is_zero() && next.max_x_exponent() >= Rational(ak) * e)
      fail(Errc::InternalError, "leading terms failed to cancel");
    sub.push_back(next);

    LaurentPoly gmono = LaurentPoly::x(rep[0]);
    for (int j = 1; j < k; ++j)
      gmono = gmono * g[static_cast<size_t>(j)].pow(rep[static_cast<size_t>(j)]);
    g.push_back(g[static_cast<size_t>(k)].pow(ak) - gmono.scaled(theta_k));
  }

  if (!is_key_sequence(out.omega.w))
    fail(Errc::InternalError, "series iteration produced a non-key sequence");
  out.kf = build_key_forms(out.omega, out.theta);
  if (out.kf.g != g)
    fail(Errc::InternalError, "incremental key forms disagree with reconstruction");
  return out;
}

namespace {

// binom(beta, j) for rational beta.
Rational rational_binomial(const Rational& beta, long long j) {
  Rational acc(1);
  for (long long i = 0; i < j; ++i) {
    acc *= (beta - Rational(i));
    acc /= Rational(i + 1);
  }
  return acc;
}

}  // namespace

GenericSeries coordinate_change(const GenericSeries& s, const CoordinateChange& t,
                                bool enforce_admissible) {
  if (t.a == 0 || t.c == 0)
    fail(Errc::InadmissibleChange, "scalings a, c must be non-zero");
  GenericSeries cs = make_series(s.body, s.r);
  long long w0 = delta_x(cs);

  bool f_nonzero = false;
  long long f_deg = 0;
  for (const auto& [m, coef] : t.f) {
    if (coef == 0) continue;
    if (m < 0)
      fail(Errc::InadmissibleChange, "f must be a polynomial in x");
    f_nonzero = true;
    f_deg = std::max(f_deg, m);
  }
  if (enforce_admissible) {
    if (f_nonzero && Rational(f_deg) > cs.r)
      fail(Errc::InadmissibleChange, "deg(f) must not exceed r");
    if (t.b != 0 && !cs.body.empty()) {
      Rational beta0 = cs.body.rbegin()->first;
      if (beta0 - 1 > cs.r)
        fail(Errc::InadmissibleChange, "x-shift b must vanish here");
    }
  }

  auto a_pow = [&](const Rational& exponent) {
    Rational scaled = Rational(w0) * exponent;
    if (!is_integer(scaled))
      fail(Errc::InconsistentInput, "exponent denominator does not divide omega_0");
    return pow_rat(t.a, to_ll(rat_num(scaled)));
  };

  std::map<Rational, Rational> body;
  auto contribute = [&](const Rational& base_exp, const Rational& base_coef) {
    // base_coef * x^base_exp with x = (x' - b)/A expands binomially in x'.
    Rational scaled_coef = base_coef / a_pow(base_exp);
    for (long long j = 0;; ++j) {
      Rational e = base_exp - Rational(j);
      if (e <= cs.r) break;
      Rational c = scaled_coef * rational_binomial(base_exp, j) * pow_rat(-t.b, j);
      if (c != 0) body[e] += c;
      if (t.b == 0) break;
      if (is_integer(base_exp) && j >= to_ll(rat_num(base_exp)) &&
          rat_num(base_exp) >= 0)
        break;  // integer powers expand finitely
    }
  };

  for (const auto& [e, c] : cs.body) contribute(e, t.c * c);
  for (const auto& [m, coef] : t.f)
    if (coef != 0) contribute(Rational(m), coef);

  return make_series(std::move(body), cs.r);
}

}  // namespace pnc

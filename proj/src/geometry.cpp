#include "pnc/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "pnc/enumerate.hpp"

namespace pnc {

namespace {

long long alpha_weighted_sum(const KeySequence& omega, const GcdLadder& lad) {
  long long s = 0;
  for (int k = 1; k <= omega.n(); ++k) s += (lad.alpha(k) - 1) * omega[k];
  return s;
}

}  // namespace

long long canonical_coefficient(const KeySequence& omega) {
  require_primitive(omega);
  GcdLadder lad = gcd_ladder(omega);
  return -(omega[0] + omega.last() + 1 - alpha_weighted_sum(omega, lad));
}

SingularityReport singularity_report(const KeySequence& omega) {
  require_primitive(omega);
  GcdLadder lad = gcd_ladder(omega);
  SingularityReport rep;
  rep.k_canonical = canonical_coefficient(omega);
  rep.is_rational = rep.k_canonical < 0;
  rep.algebraic = is_algebraic(omega);
  rep.requires_algebraic = !rep.algebraic;

  long long wmin = *std::min_element(omega.w.begin(), omega.w.end());
  rep.is_elliptic = rep.k_canonical >= 0 && rep.k_canonical < wmin;

  // p_g = |Sigma|: lattice vectors with beta_j < alpha_j (1 <= j <= n) and
  // sum omega_j beta_j <= k.  Everything is positive, so the count is finite.
  if (rep.k_canonical < 0) {
    rep.p_g = 0;
  } else {
    long long count = 0;
    std::vector<long long> beta(omega.w.size(), 0);
    std::function<void(int, long long)> walk = [&](int j, long long budget) {
      if (j == omega.size()) {
        ++count;
        return;
      }
      long long cap = budget / omega[j];
      if (j >= 1 && j <= omega.n()) cap = std::min(cap, lad.alpha(j) - 1);
      for (long long b = 0; b <= cap; ++b) walk(j + 1, budget - b * omega[j]);
    };
    walk(0, rep.k_canonical);
    rep.p_g = count;
  }

  long long a_last = lad.alpha(omega.n() + 1);
  long long w_last = omega.last();
  long long k = std::llabs(rep.k_canonical);
  if (k == 0) {
    rep.gorenstein_index = 1;  // the zero divisor is Cartier
  } else {
    long long m1 = a_last / std::gcd(a_last, k);
    long long m2 = w_last / std::gcd(w_last, k);
    rep.gorenstein_index = std::lcm(m1, m2);
  }
  rep.is_gorenstein = rep.gorenstein_index == 1;

  long long tilde = 0;
  for (int j = 0; j <= omega.n(); ++j) tilde = std::gcd(tilde, omega[j]);
  rep.quotient_type = {tilde, omega.last()};

  // Rigid unless the surface is P^2(1,1,q).  That happens exactly when the
  // essential subsequence has length 2 (no Puiseux pairs: the valuation is a
  // weighted degree in suitable coordinates) with a unit weight; the essential
  // subsequence is coordinate-invariant, unlike the raw sequence.
  KeySequence ess = essential_subsequence(omega).sub;
  rep.rigid_embedding = !(ess.size() == 2 && std::min(ess[0], ess[1]) == 1);
  return rep;
}

EmbeddingEquations embedding_equations(const KeySequence& omega,
                                       const ThetaVector& theta) {
  require_primitive(omega);
  if (!is_algebraic(omega))
    fail(Errc::NotAlgebraic, "embedding equations need an algebraic key sequence");
  if (static_cast<int>(theta.size()) != omega.n())
    fail(Errc::ThetaLengthMismatch, "need exactly n theta values");
  GcdLadder lad = gcd_ladder(omega);

  EmbeddingEquations out;
  out.weights.push_back(1);
  out.weights.insert(out.weights.end(), omega.w.begin(), omega.w.end());
  for (int k = 1; k <= omega.n(); ++k) {
    WeightedEquation eq;
    eq.k = k;
    eq.alpha = lad.alpha(k);
    eq.weighted_degree = lad.alpha(k) * omega[k];
    eq.w_power = lad.alpha(k) * omega[k] - omega[k + 1];
    eq.theta = theta[static_cast<size_t>(k - 1)];
    eq.beta = bounded_representation(omega, k).beta;
    out.equations.push_back(std::move(eq));
  }
  return out;
}

std::vector<std::pair<Rational, std::vector<long long>>> equation_monomials(
    const WeightedEquation& eq, int n) {
  // Variables ordered (w, y_0, ..., y_{n+1}).
  size_t nvars = static_cast<size_t>(n) + 3;
  std::vector<std::pair<Rational, std::vector<long long>>> out;

  std::vector<long long> m1(nvars, 0);
  m1[0] = eq.w_power;
  m1[static_cast<size_t>(eq.k) + 2] = 1;  // y_{k+1}
  out.emplace_back(Rational(1), m1);

  std::vector<long long> m2(nvars, 0);
  m2[static_cast<size_t>(eq.k) + 1] = eq.alpha;  // y_k^{alpha_k}
  out.emplace_back(Rational(-1), m2);

  std::vector<long long> m3(nvars, 0);
  for (size_t j = 0; j < eq.beta.size(); ++j) m3[j + 1] = eq.beta[j];
  out.emplace_back(eq.theta, m3);
  return out;
}

CurveAtInfinityReport curve_at_infinity(const KeySequence& omega) {
  require_primitive(omega);
  if (!is_algebraic(omega))
    fail(Errc::NotAlgebraic, "curve-at-infinity data needs an algebraic key sequence");
  GcdLadder lad = gcd_ladder(omega);
  CurveAtInfinityReport rep;
  for (int k = 0; k <= omega.n(); ++k)
    rep.semigroup_S_generators.emplace_back(omega[k], 0);
  rep.semigroup_S_generators.emplace_back(0, omega.last());

  // S~ = Z>=0<alpha_{n+1} omega_{n+1}> intersect Z>=0<omega_0..omega_n>.
  // Scale down by g = alpha_{n+1} omega_{n+1}: T = {m : m g in the prefix
  // semigroup} is a numerical semigroup; minimal generators of S~ are g times
  // those of T.
  long long g = lad.alpha(omega.n() + 1) * omega.last();
  std::vector<long long> prefix(omega.w.begin(), omega.w.end() - 1);

  long long dpre = 0;
  for (long long v : prefix) dpre = std::gcd(dpre, v);
  long long big = 0;
  for (long long v : prefix) big = std::max(big, v / dpre);
  // Scan window in T-units; 2 big^2 dominates the Frobenius number of the
  // normalized prefix semigroup (Erdos-Graham), and we certify the tail below.
  long long window = 2 * big * big + 2 * big + 2;
  if (window * g > 50'000'000)
    fail(Errc::BoundsTooLarge, "curve-at-infinity semigroup scan too large");

  // Single DP over the prefix semigroup up to window * g.
  std::vector<char> in_prefix(static_cast<size_t>(window * g) + 1, 0);
  in_prefix[0] = 1;
  for (long long v = 1; v <= window * g; ++v)
    for (long long p : prefix)
      if (p <= v && in_prefix[static_cast<size_t>(v - p)]) {
        in_prefix[static_cast<size_t>(v)] = 1;
        break;
      }
  auto inT = [&](long long m) { return in_prefix[static_cast<size_t>(m * g)] != 0; };

  std::vector<long long> gens;
  long long run = 0;
  bool saturated = false;
  for (long long m = 1; m <= window; ++m) {
    if (!inT(m)) {
      run = 0;
      continue;
    }
    ++run;
    bool minimal = true;
    for (long long a : gens)
      if (m - a >= 0 && inT(m - a)) {
        minimal = false;
        break;
      }
    if (minimal) gens.push_back(m);
    // A full run of length min-gen certifies that everything later is in T
    // and splits off the smallest generator, so no generators remain.
    if (!gens.empty() && run >= gens.front()) {
      saturated = true;
      break;
    }
  }
  if (!saturated)
    fail(Errc::InternalError, "tilde-S scan window too small");

  for (long long m : gens) rep.tilde_S_generators.push_back(m * g);
  rep.is_smooth_at_Pinf = gens.size() == 1 && gens[0] == 1;
  return rep;
}

BrentonResult brenton_enumerate(long long bound) {
  if (bound < 1)
    fail(Errc::InconsistentInput, "brenton enumeration needs bound >= 1");
  BrentonResult out;
  BrentonFamily p2{"P2", {1, 1, 1}, {}};
  BrentonFamily p112{"P112", {1, 1, 2}, {}};
  BrentonFamily p123{"P123", {1, 2, 3}, {}};
  std::vector<BrentonFamily> fr;
  for (long long r = 1; r <= 5; ++r)
    fr.push_back({"F" + std::to_string(r), {1, 2, 3, r}, {}});

  EnumBounds eb{bound, 4};
  EnumFilters ef;
  ef.primitive = true;
  ef.normal = true;
  ef.gorenstein = true;
  ef.rational = true;  // vanishing geometric genus at both singular points
  enumerate_key_sequences(eb, ef, [&](const KeySequence& w) {
    SingularityReport rep = singularity_report(w);
    if (rep.p_g != 0) return;
    if (!is_essential(w)) {
      out.specializations.push_back(w);
      return;
    }
    if (w.w == std::vector<long long>{1, 1}) p2.members.push_back(w);
    else if (w.w == std::vector<long long>{1, 2}) p112.members.push_back(w);
    else if (w.w == std::vector<long long>{2, 3}) p123.members.push_back(w);
    else if (w.size() == 3 && w[0] == 2 && w[1] == 3 && w[2] >= 1 && w[2] <= 5)
      fr[static_cast<size_t>(w[2]) - 1].members.push_back(w);
    else
      fail(Errc::InternalError,
           "Gorenstein p_g = 0 sequence outside the classified families");
  });

  // Every non-essential hit must fold into a listed family.
  for (const KeySequence& w : out.specializations) {
    KeySequence ess = essential_subsequence(w).sub;
    bool known = ess.w == std::vector<long long>{1, 1} ||
                 ess.w == std::vector<long long>{1, 2} ||
                 ess.w == std::vector<long long>{2, 3} ||
                 (ess.size() == 3 && ess[0] == 2 && ess[1] == 3 && ess[2] >= 1 &&
                  ess[2] <= 5);
    if (!known)
      fail(Errc::InternalError, "specialization escapes the classified families");
  }

  out.families.push_back(std::move(p2));
  out.families.push_back(std::move(p112));
  out.families.push_back(std::move(p123));
  for (auto& f : fr) out.families.push_back(std::move(f));
  return out;
}

}  // namespace pnc

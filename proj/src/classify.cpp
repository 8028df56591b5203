#include "pnc/classify.hpp"

#include <algorithm>
#include <numeric>

#include "pnc/geometry.hpp"

namespace pnc {

const char* to_string(AutCase c) {
  switch (c) {
    case AutCase::PGL3: return "PGL3";
    case AutCase::weighted_w0_eq_1: return "weighted_w0_eq_1";
    case AutCase::weighted_w0_gt_1: return "weighted_w0_gt_1";
    case AutCase::general: return "general";
  }
  return "?";
}

const char* to_string(ModuliMode m) {
  switch (m) {
    case ModuliMode::fixed_sequence: return "fixed_sequence";
    case ModuliMode::essential_family: return "essential_family";
    case ModuliMode::curve_family: return "curve_family";
  }
  return "?";
}

const char* to_string(G2aShape s) {
  switch (s) {
    case G2aShape::affine_translations: return "affine_translations";
    case G2aShape::y_translations_only: return "y_translations_only";
    case G2aShape::none: return "none";
  }
  return "?";
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_normal_primitive(const KeySequence& omega) {
  require_primitive(omega);
  if (!normal_form_check(omega).ok)
    fail(Errc::NotNormalForm, "key sequence must be in the normal form");
}

long long q_omega_of(const KeySequence& omega, const GcdLadder& lad) {
  long long s = 0;
  for (int k = 1; k <= omega.n(); ++k) s += (lad.alpha(k) - 1) * omega[k];
  return omega.last() - s;
}

}  // namespace

AutDescriptor aut_group(const KeySequence& omega) {
  require_normal_primitive(omega);
  GcdLadder lad = gcd_ladder(omega);
  long long k_x = canonical_coefficient(omega);
  long long q = q_omega_of(omega, lad);

  AutDescriptor d;
  d.b_free = omega[1] + k_x < 0;
  d.f_degree_bound = floor_div(q, omega[0]);

  if (omega.n() == 0) {
    if (omega[0] == 1 && omega[1] == 1) {
      d.kase = AutCase::PGL3;
      d.torus_rank = 2;
      d.unipotent_dim = 2;  // the translation subgroup
    } else if (omega[0] == 1) {
      d.kase = AutCase::weighted_w0_eq_1;
      d.torus_rank = 2;
      d.unipotent_dim = omega[1] + 1 + 1;  // f of degree omega_1 plus the x-shift
    } else {
      d.kase = AutCase::weighted_w0_gt_1;
      d.torus_rank = 2;
      d.unipotent_dim = d.f_degree_bound + 1 + 1;
    }
    d.finite = false;
    return d;
  }

  d.kase = AutCase::general;
  long long a_last = lad.alpha(omega.n() + 1);
  if (omega.n() >= 2) {
    // omega-hat_k = alpha_1 w~_1 + sum_{j=2}^{k-1} (alpha_j - 1) w~_j - w~_k
    long long hat = 0;
    long long running = lad.alpha(1) * (omega[1] / a_last);
    for (int k = 2; k <= omega.n(); ++k) {
      long long hk = running - omega[k] / a_last;
      hat = std::gcd(hat, std::llabs(hk));
      running += (lad.alpha(k) - 1) * (omega[k] / a_last);
    }
    d.omega_hat = hat;
    d.finite_part_order = hat;
    d.torus_rank = 0;
  } else {
    d.torus_rank = 1;
  }
  d.unipotent_dim = std::max<long long>(d.f_degree_bound + 1, 0) + (d.b_free ? 1 : 0);
  d.finite = omega.n() >= 2 && !d.b_free && d.f_degree_bound < 0;
  return d;
}

bool aut_is_finite(const KeySequence& omega) { return aut_group(omega).finite; }

std::vector<long long> moduli_mu(const KeySequence& omega) {
  require_key(omega);
  GcdLadder lad = gcd_ladder(omega);
  EssentialSubsequence ess = essential_subsequence(omega);
  // Products P_j = alpha_{i_0} ... alpha_{i_j} with alpha_{i_0} := 1.
  std::vector<int> idx(ess.indices.begin() + 1, ess.indices.end() - 1);
  std::vector<long long> mu;
  for (int i = 1; i <= omega.n(); ++i) {
    int k = 0;
    while (k < static_cast<int>(idx.size()) && idx[static_cast<size_t>(k)] <= i) ++k;
    // i lies in the stratum [i_k, i_{k+1})
    std::vector<long long> rep = bounded_representation(omega, i).beta;
    long long prod = 1;
    long long value = 0;
    for (int j = 1; j <= k; ++j) {
      long long beta_ij = 0;
      int pos = idx[static_cast<size_t>(j - 1)];
      if (pos < static_cast<int>(rep.size())) beta_ij = rep[static_cast<size_t>(pos)];
      value += prod * beta_ij;  // P_{j-1} * beta_{i, i_j}
      prod *= lad.alpha(pos);
    }
    mu.push_back(prod - value);
  }
  return mu;
}

ModuliReport moduli_fixed(const KeySequence& omega) {
  require_normal_primitive(omega);
  ModuliReport rep;
  rep.mode = ModuliMode::fixed_sequence;
  rep.n = omega.n();
  rep.m = 0;
  if (omega.n() == 0) {
    rep.torus_dim = 0;  // a single point
    return rep;
  }
  rep.torus_dim = std::max(omega.n() - 2, 0);
  std::vector<long long> mu = moduli_mu(omega);
  for (int i = 1; i <= omega.n(); ++i)
    rep.theta_exponents.push_back(
        {mu[static_cast<size_t>(i - 1)], bounded_representation(omega, i).beta[0]});
  return rep;
}

namespace {

// Shared scan for the insertion slots after position k of omega:
// group/semigroup members of the open interval (omega_{k+1}, alpha_k omega_k)
// that avoid the excluded families.
void scan_check_sets(const KeySequence& omega, const GcdLadder& lad,
                     bool semigroup_only, ModuliReport& rep) {
  for (int k = 1; k <= omega.n(); ++k) {
    std::vector<long long> group_vals, alg_vals, excluded;
    long long lo = omega[k + 1], hi = lad.alpha(k) * omega[k];
    std::vector<long long> prefix(omega.w.begin(), omega.w.begin() + k + 1);
    for (long long v = lo + 1; v < hi; ++v) {
      bool in_group = v % lad.dk(k) == 0;
      if (!in_group) continue;
      if (hits_excluded_value(omega, lad, k + 1, v)) {
        excluded.push_back(v);
        continue;
      }
      bool alg = semigroup_member(prefix, v).member;
      if (!semigroup_only) group_vals.push_back(v);
      if (alg) alg_vals.push_back(v);
    }
    const std::vector<long long>& slots = semigroup_only ? alg_vals : group_vals;
    for (long long v : slots) {
      std::vector<long long> r = rep_over_prefix(omega, lad, k, v);
      long long prod = 1, value = 0;
      for (int j = 1; j <= k; ++j) {
        value += prod * r[static_cast<size_t>(j)];
        prod *= lad.alpha(j);
      }
      CheckCoordinate cc;
      cc.stratum = k;
      cc.value = v;
      cc.algebraic =
          std::find(alg_vals.begin(), alg_vals.end(), v) != alg_vals.end();
      cc.exponent = {prod - value, r[0]};
      rep.check_coordinates.push_back(cc);
    }
    rep.omega_check_sets.push_back(std::move(group_vals));
    rep.omega_check_alg_sets.push_back(std::move(alg_vals));
    rep.excluded_sets.push_back(std::move(excluded));
  }
  rep.m = static_cast<long long>(rep.check_coordinates.size());
}

}  // namespace

ModuliReport moduli_essential(const KeySequence& omega) {
  require_normal_primitive(omega);
  if (!is_essential(omega))
    fail(Errc::NotEssential, "essential-family moduli need an essential sequence");
  ModuliReport rep = moduli_fixed(omega);
  rep.mode = ModuliMode::essential_family;
  GcdLadder lad = gcd_ladder(omega);
  scan_check_sets(omega, lad, false, rep);
  return rep;
}

ModuliReport curve_moduli(const std::vector<long long>& delta_seq) {
  if (delta_seq == std::vector<long long>{1}) {
    // The line: a single embedded class.
    ModuliReport rep;
    rep.mode = ModuliMode::curve_family;
    rep.n = 0;
    rep.m = 0;
    rep.torus_dim = 0;
    rep.b_slot = ActionExponent{1, 0};  // deg_y(g_{n+1}) = 1
    return rep;
  }
  for (long long v : delta_seq)
    if (v <= 0) fail(Errc::NotDeltaSequence, "delta sequence entries must be positive");
  std::vector<long long> appended = delta_seq;
  appended.push_back(0);
  if (!is_key_sequence(appended))
    fail(Errc::NotDeltaSequence, "appending 0 does not give a key sequence");
  KeySequence W(appended);
  GcdLadder lad = gcd_ladder(W);
  for (int k = 1; k <= W.n(); ++k)
    if (lad.alpha(k) < 2)
      fail(Errc::NotDeltaSequence, "delta sequence must be essential");
  if (!is_algebraic(W))
    fail(Errc::NotDeltaSequence, "delta sequence must be algebraic");
  if (!normal_form_check(W).ok)
    fail(Errc::NotNormalForm, "delta sequence not in normal form");

  ModuliReport rep;
  rep.mode = ModuliMode::curve_family;
  rep.n = W.n();
  std::vector<long long> mu = moduli_mu(W);
  for (int i = 1; i <= W.n(); ++i)
    rep.theta_exponents.push_back(
        {mu[static_cast<size_t>(i - 1)], bounded_representation(W, i).beta[0]});
  scan_check_sets(W, lad, true, rep);
  long long p = 1;
  for (int k = 1; k <= W.n(); ++k) p *= lad.alpha(k);
  rep.b_slot = ActionExponent{p, 0};
  rep.torus_dim = std::max<long long>(rep.n + rep.m + 1 - 2, 0);
  return rep;
}

G2aReport g2a_report(const KeySequence& omega) {
  require_normal_primitive(omega);
  GcdLadder lad = gcd_ladder(omega);
  G2aReport rep;
  rep.q_omega = q_omega_of(omega, lad);
  rep.admits_action = rep.q_omega >= 0;
  long long k_x = canonical_coefficient(omega);
  rep.picard1_g2a = k_x + omega[1] < 0;
  if (!rep.admits_action) {
    rep.action_shape = G2aShape::none;
  } else if (rep.picard1_g2a) {
    rep.action_shape = G2aShape::affine_translations;
  } else {
    rep.action_shape = G2aShape::y_translations_only;
  }
  rep.translation_param_dim =
      rep.q_omega >= 0 ? rep.q_omega / omega[0] + 1 : 0;
  return rep;
}

}  // namespace pnc

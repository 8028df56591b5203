#include "pnc/keyseq.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace pnc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveLead: return "NonPositiveLead";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ThetaLengthMismatch: return "ThetaLengthMismatch";
    case Errc::InvalidKeySequence: return "InvalidKeySequence";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NegativePower: return "NegativePower";
    case Errc::NonPrimitive: return "NonPrimitive";
    case Errc::NotAlgebraic: return "NotAlgebraic";
    case Errc::NotNormalForm: return "NotNormalForm";
    case Errc::NotEssential: return "NotEssential";
    case Errc::NotDeltaSequence: return "NotDeltaSequence";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::IrrationalCorrection: return "IrrationalCorrection";
    case Errc::InadmissibleChange: return "InadmissibleChange";
    case Errc::NonIntegralDegree: return "NonIntegralDegree";
    case Errc::BoundsTooLarge: return "BoundsTooLarge";
    case Errc::IrrationalCoefficientNeeded: return "IrrationalCoefficientNeeded";
    case Errc::NotNormalizable: return "NotNormalizable";
    case Errc::UsageError: return "UsageError";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

namespace {

long long gcd_ll(long long a, long long b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

}  // namespace

GcdLadder gcd_ladder(const KeySequence& omega) {
  if (omega.size() < 2)
    fail(Errc::InvalidKeySequence, "key sequence needs length >= 2");
  if (omega[0] < 1)
    fail(Errc::NonPositiveLead, "omega_0 must be >= 1");
  GcdLadder out;
  out.d.reserve(omega.w.size());
  out.d.push_back(omega[0]);
  for (int k = 1; k < omega.size(); ++k) {
    long long dk = gcd_ll(out.d.back(), omega[k]);
    out.alpha_.push_back(out.d.back() / dk);
    out.d.push_back(dk);
  }
  return out;
}

bool is_key_sequence(const std::vector<long long>& omega) {
  if (omega.size() < 2 || omega[0] < 1) return false;
  GcdLadder lad = gcd_ladder(KeySequence(omega));
  if (lad.d.back() != 1) return false;
  int n = static_cast<int>(omega.size()) - 2;
  for (int k = 1; k <= n; ++k)
    if (omega[static_cast<size_t>(k + 1)] >= lad.alpha(k) * omega[static_cast<size_t>(k)])
      return false;
  return true;
}

void require_key(const KeySequence& omega) {
  if (!is_key_sequence(omega.w))
    fail(Errc::InvalidKeySequence, "not a key sequence");
}

bool is_primitive(const KeySequence& omega) {
  return std::all_of(omega.w.begin(), omega.w.end(),
                     [](long long v) { return v > 0; });
}

void require_primitive(const KeySequence& omega) {
  require_key(omega);
  if (!is_primitive(omega))
    fail(Errc::NonPrimitive, "key sequence is not primitive");
}

std::vector<long long> rep_over_prefix(const KeySequence& omega,
                                       const GcdLadder& ladder, int upto,
                                       long long target) {
  if (upto < 0 || upto >= omega.size())
    fail(Errc::IndexOutOfRange, "prefix index out of range");
  std::vector<long long> beta(static_cast<size_t>(upto) + 1, 0);
  long long rest = target;
  // Descend: the quotient d_j Z / d_{j-1} Z is cyclic of order alpha_j,
  // generated by the image of omega_j, so each digit is forced.
  for (int j = upto; j >= 1; --j) {
    long long dprev = ladder.dk(j - 1);
    long long aj = ladder.alpha(j);
    bool found = false;
    for (long long b = 0; b < aj; ++b) {
      if ((rest - b * omega[j]) % dprev == 0) {
        beta[static_cast<size_t>(j)] = b;
        rest -= b * omega[j];
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::InternalError, "no digit in cyclic quotient; target not in d_k Z");
  }
  if (rest % omega[0] != 0)
    fail(Errc::InternalError, "residual not divisible by omega_0");
  beta[0] = rest / omega[0];
  return beta;
}

BoundedRep bounded_representation(const KeySequence& omega, int k) {
  require_key(omega);
  if (k < 1 || k > omega.n())
    fail(Errc::IndexOutOfRange, "bounded representation index must satisfy 1 <= k <= n");
  GcdLadder lad = gcd_ladder(omega);
  BoundedRep rep;
  rep.k = k;
  rep.beta = rep_over_prefix(omega, lad, k - 1, lad.alpha(k) * omega[k]);
  return rep;
}

EssentialSubsequence essential_subsequence(const KeySequence& omega) {
  require_key(omega);
  GcdLadder lad = gcd_ladder(omega);
  EssentialSubsequence out;
  out.indices.push_back(0);
  out.sub.w.push_back(omega[0]);
  for (int k = 1; k <= omega.n(); ++k) {
    if (lad.alpha(k) >= 2) {
      out.indices.push_back(k);
      out.sub.w.push_back(omega[k]);
    }
  }
  out.indices.push_back(omega.n() + 1);
  out.sub.w.push_back(omega.last());
  if (!is_key_sequence(out.sub.w))
    fail(Errc::InternalError, "essential subsequence is not a key sequence");
  return out;
}

SemigroupDecision semigroup_member(const std::vector<long long>& generators,
                                   long long target) {
  if (generators.empty())
    fail(Errc::InconsistentInput, "semigroup needs at least one generator");
  for (long long g : generators)
    if (g < 1) fail(Errc::InconsistentInput, "semigroup generators must be >= 1");
  SemigroupDecision dec;
  dec.witness.assign(generators.size(), 0);
  if (target < 0) return dec;  // NegativeTarget yields false, not an error
  if (target == 0) { dec.member = true; return dec; }

  long long g = 0;
  for (long long v : generators) g = std::gcd(g, v);
  if (target % g != 0) return dec;
  long long t = target / g;
  std::vector<long long> gens;
  gens.reserve(generators.size());
  for (long long v : generators) gens.push_back(v / g);

  // Everything above Brauer's bound -a_1 + sum a_i (d_{i-1}/d_i - 1) is
  // representable; walk larger targets down by the smallest generator into
  // the DP table.
  long long amin = *std::min_element(gens.begin(), gens.end());
  std::vector<long long> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  long long frob_bound = -sorted[0];
  long long dprev = sorted[0];
  for (size_t i = 1; i < sorted.size(); ++i) {
    long long di = std::gcd(dprev, sorted[i]);
    frob_bound += sorted[i] * (dprev / di - 1);
    dprev = di;
  }
  frob_bound = std::max(frob_bound, 0LL);

  long long extra_min = 0;
  if (t > frob_bound + amin) {
    extra_min = (t - frob_bound - 1) / amin;  // land strictly above the bound
    t -= extra_min * amin;
  }
  if (t > 4'000'000)
    fail(Errc::BoundsTooLarge, "semigroup membership target too large for DP");

  // parent[v] = index of the generator used to reach v
  std::vector<int> parent(static_cast<size_t>(t) + 1, -1);
  parent[0] = static_cast<int>(gens.size());
  for (long long v = 1; v <= t; ++v)
    for (size_t i = 0; i < gens.size(); ++i)
      if (gens[i] <= v && parent[static_cast<size_t>(v - gens[i])] >= 0) {
        parent[static_cast<size_t>(v)] = static_cast<int>(i);
        break;
      }
  if (parent[static_cast<size_t>(t)] < 0) {
    if (extra_min > 0)
      fail(Errc::InternalError, "Frobenius shortcut landed on a gap");
    return dec;
  }
  dec.member = true;
  for (long long v = t; v > 0;) {
    int i = parent[static_cast<size_t>(v)];
    ++dec.witness[static_cast<size_t>(i)];
    v -= gens[static_cast<size_t>(i)];
  }
  size_t imin = static_cast<size_t>(
      std::min_element(gens.begin(), gens.end()) - gens.begin());
  dec.witness[imin] += extra_min;
  return dec;
}

bool hits_excluded_value(const KeySequence& omega, const GcdLadder& ladder,
                         int j, long long value) {
  long long s = 0;
  for (int i = 1; i < j; ++i) s += (ladder.alpha(i) - 1) * omega[i];
  // family (i): s + m*omega_0, m >= 0
  if (value >= s && (value - s) % omega[0] == 0) return true;
  // family (ii): s - (alpha_1 - 1) omega_1 + alpha_1 omega_1 - omega_0
  long long second = s - (ladder.alpha(1) - 1) * omega[1] +
                     ladder.alpha(1) * omega[1] - omega[0];
  return value == second;
}

NormalFormCheck normal_form_check(const KeySequence& omega) {
  require_key(omega);
  NormalFormCheck out;
  GcdLadder lad = gcd_ladder(omega);
  if (omega.n() == 0) {
    long long w0 = omega[0], w1 = omega[1];
    if ((w0 == 1 && w1 == 1) || (w0 == 1 && w1 == 0) || (0 < w0 && w0 < w1)) {
      out.ok = true;
    } else {
      out.violated = "N0c";
    }
    return out;
  }
  if (!(0 < omega[0] && omega[0] < omega[1])) {
    out.violated = "N1b";
    return out;
  }
  if (lad.alpha(1) < 2) {
    out.violated = "N1c";
    return out;
  }
  for (int j = 2; j <= omega.n(); ++j) {
    if (hits_excluded_value(omega, lad, j, omega[j])) {
      out.violated = "N1d";
      return out;
    }
  }
  out.ok = true;
  return out;
}

bool is_algebraic(const KeySequence& omega) {
  for (int k = 1; k <= omega.n(); ++k)
    if (bounded_representation(omega, k).beta[0] < 0) return false;
  return true;
}

bool is_essential(const KeySequence& omega) {
  GcdLadder lad = gcd_ladder(omega);
  for (int k = 1; k <= omega.n(); ++k)
    if (lad.alpha(k) < 2) return false;
  return true;
}

SequenceClass validate(const std::vector<long long>& w) {
  SequenceClass cls;
  if (w.empty() || w[0] < 1) {
    cls.violations.push_back("P1");
    return cls;
  }
  if (w.size() < 2) {
    cls.violations.push_back("P2");
    return cls;
  }
  KeySequence omega(w);
  GcdLadder lad = gcd_ladder(omega);
  bool ok = true;
  if (lad.d.back() != 1) {
    cls.violations.push_back("P2");
    ok = false;
  }
  for (int k = 1; k <= omega.n(); ++k) {
    if (omega[k + 1] >= lad.alpha(k) * omega[k]) {
      cls.violations.push_back("P3");
      ok = false;
      break;
    }
  }
  cls.is_key = ok;
  if (!ok) return cls;

  cls.is_primitive = is_primitive(omega);
  if (!cls.is_primitive) cls.violations.push_back("PRIM");
  cls.is_algebraic = is_algebraic(omega);
  if (!cls.is_algebraic) cls.violations.push_back("ALG");
  cls.is_essential = is_essential(omega);
  if (!cls.is_essential) cls.violations.push_back("ESS");
  NormalFormCheck nf = normal_form_check(omega);
  cls.is_normal_form = nf.ok;
  if (!nf.ok) cls.violations.push_back(nf.violated);
  return cls;
}

}  // namespace pnc

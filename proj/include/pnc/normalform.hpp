#pragma once

#include <cstdint>

#include "pnc/puiseux.hpp"

namespace pnc {

// The correction slots S_k, the normalizable subset S', and the forbidden
// key-sequence values omega_hat attached to them.
struct NormalizationData {
  FormalPairs fp;
  std::vector<std::vector<Rational>> strata;   // S_1 .. S_l
  std::vector<Rational> s_prime;               // descending order
  std::map<Rational, long long> omega_hat;     // beta -> forbidden value, over all of S
};

// Requires (fp, omega) to come from the same valuation: the alphas at the
// essential indices must equal the p's and the pole of the last key form
// must match.  InconsistentInput otherwise.
NormalizationData s_prime(const FormalPairs& fp, const KeySequence& omega);

// Clause N1(d) evaluated through omega_hat avoidance; must agree with
// normal_form_check on consistent inputs.
bool normal_form_equiv(const KeySequence& omega, const FormalPairs& fp);

struct NormalizeResult {
  GenericSeries series;
  CoordinateChange transform;  // composite triangular change applied
  SeriesKeyData key_data;
};

NormalizeResult normalize_series(const GenericSeries& s);

// Applies `trials` random admissible coordinate changes and renormalizes;
// true iff every run reproduces the same key sequence.
bool uniqueness_check(const GenericSeries& s, int trials, uint64_t seed);

}  // namespace pnc

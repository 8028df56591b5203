#pragma once

#include <vector>

#include "pnc/keyseq.hpp"
#include "pnc/laurent.hpp"

namespace pnc {

using ThetaVector = std::vector<Rational>;

// g_0 = x, g_1 = y, g_{k+1} = g_k^{alpha_k} - theta_k prod_j g_j^{beta_{k,j}}.
struct KeyFormSet {
  KeySequence omega;
  GcdLadder ladder;
  ThetaVector theta;
  std::vector<LaurentPoly> g;  // g_0 .. g_{n+1}

  int n() const { return omega.n(); }
};

// Exponent vectors (beta_0,...,beta_{n+1}) with 0 <= beta_j < alpha_j for
// 1 <= j <= n and beta_{n+1} >= 0; beta_0 ranges over Z.
struct BasisExpansion {
  std::map<std::vector<long long>, Rational> terms;
};

KeyFormSet build_key_forms(const KeySequence& omega, const ThetaVector& theta);

BasisExpansion basis_expand(const LaurentPoly& f, const KeyFormSet& kf);

// Substitutes the key forms back into an expansion; inverse of basis_expand.
LaurentPoly evaluate_expansion(const BasisExpansion& e, const KeyFormSet& kf);

long long semidegree(const LaurentPoly& f, const KeyFormSet& kf);

long long weight_of(const std::vector<long long>& beta, const KeySequence& omega);

enum class CompactificationClass { none, analytic_only, algebraic };

const char* to_string(CompactificationClass c);

CompactificationClass compactification_class(const KeyFormSet& kf);

}  // namespace pnc

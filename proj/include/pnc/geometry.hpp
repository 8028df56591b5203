#pragma once

#include <utility>
#include <vector>

#include "pnc/keyforms.hpp"

namespace pnc {

struct SingularityReport {
  long long k_canonical = 0;
  bool is_rational = false;
  bool is_elliptic = false;
  long long p_g = 0;
  std::pair<long long, long long> quotient_type{1, 1};  // 1/omega~ (1, omega_{n+1})
  long long gorenstein_index = 1;
  bool is_gorenstein = true;
  bool rigid_embedding = false;
  // Ellipticity and p_g are only asserted by the theory for algebraic
  // sequences; this flags the fields as conditional otherwise.
  bool requires_algebraic = false;
  bool algebraic = false;
};

// Weighted-homogeneous generators G_k of the image in P(1, omega_0..omega_{n+1});
// variables are w (weight 1) and y_0..y_{n+1}.
struct WeightedEquation {
  int k = 0;                      // equation index, 1..n
  long long alpha = 1;            // alpha_k
  long long w_power = 0;          // alpha_k omega_k - omega_{k+1}
  long long weighted_degree = 0;  // alpha_k omega_k
  Rational theta;
  std::vector<long long> beta;    // exponents of y_0..y_{k-1} in the theta monomial
};

struct EmbeddingEquations {
  std::vector<long long> weights;  // (1, omega_0, ..., omega_{n+1})
  std::vector<WeightedEquation> equations;
};

struct CurveAtInfinityReport {
  std::vector<std::pair<long long, long long>> semigroup_S_generators;
  std::vector<long long> tilde_S_generators;  // minimal generators of S~
  bool is_smooth_at_Pinf = false;
};

long long canonical_coefficient(const KeySequence& omega);

SingularityReport singularity_report(const KeySequence& omega);

EmbeddingEquations embedding_equations(const KeySequence& omega,
                                       const ThetaVector& theta);

CurveAtInfinityReport curve_at_infinity(const KeySequence& omega);

// Renders G_k as a Laurent-style polynomial in (w, y_0..y_{n+1}) for the
// weighted-homogeneity property test: list of (coefficient, exponents).
std::vector<std::pair<Rational, std::vector<long long>>> equation_monomials(
    const WeightedEquation& eq, int n);

struct BrentonFamily {
  std::string name;                     // "P2", "P112", "P123", "F1".."F5"
  std::vector<long long> ambient;      // weights of the ambient space
  std::vector<KeySequence> members;    // essential representatives
};

struct BrentonResult {
  std::vector<BrentonFamily> families;
  // Normal non-essential hits; each folds into a family via its essential
  // subsequence.
  std::vector<KeySequence> specializations;
};

BrentonResult brenton_enumerate(long long bound);

}  // namespace pnc

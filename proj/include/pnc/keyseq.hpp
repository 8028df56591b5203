#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnc/error.hpp"

namespace pnc {

// Integer sequence (omega_0, ..., omega_{n+1}), length n+2 with n >= 0.
struct KeySequence {
  std::vector<long long> w;

  KeySequence() = default;
  explicit KeySequence(std::vector<long long> entries) : w(std::move(entries)) {}
  KeySequence(std::initializer_list<long long> entries) : w(entries) {}

  int n() const { return static_cast<int>(w.size()) - 2; }
  int size() const { return static_cast<int>(w.size()); }
  long long operator[](int i) const { return w[static_cast<size_t>(i)]; }
  long long last() const { return w.back(); }
  bool operator==(const KeySequence& o) const { return w == o.w; }
  bool operator<(const KeySequence& o) const { return w < o.w; }
};

// d_k = gcd(|omega_0|,...,|omega_k|), alpha_k = d_{k-1}/d_k.
struct GcdLadder {
  std::vector<long long> d;       // d_0 .. d_{n+1}
  std::vector<long long> alpha_;  // alpha_1 .. alpha_{n+1}

  long long alpha(int k) const { return alpha_[static_cast<size_t>(k - 1)]; }
  long long dk(int k) const { return d[static_cast<size_t>(k)]; }
};

// alpha_k * omega_k = sum_j beta[j] * omega_j, 0 <= beta[j] < alpha_j for j >= 1.
struct BoundedRep {
  int k = 0;
  std::vector<long long> beta;  // beta_{k,0} .. beta_{k,k-1}
};

struct SequenceClass {
  bool is_key = false;
  bool is_primitive = false;
  bool is_algebraic = false;
  bool is_essential = false;
  bool is_normal_form = false;
  std::vector<std::string> violations;
};

struct NormalFormCheck {
  bool ok = false;
  std::string violated;  // clause label when !ok ("N0c", "N1b", "N1c", "N1d")
};

struct SemigroupDecision {
  bool member = false;
  std::vector<long long> witness;  // coefficients per generator when member
};

GcdLadder gcd_ladder(const KeySequence& omega);

SequenceClass validate(const std::vector<long long>& omega);

BoundedRep bounded_representation(const KeySequence& omega, int k);

// Unique representation of target = sum_{j=0}^{upto} beta_j omega_j with
// 0 <= beta_j < alpha_j for 1 <= j <= upto.  Requires d_upto | target.
std::vector<long long> rep_over_prefix(const KeySequence& omega,
                                       const GcdLadder& ladder, int upto,
                                       long long target);

struct EssentialSubsequence {
  std::vector<int> indices;  // positions kept, always includes 0 and n+1
  KeySequence sub;
};

EssentialSubsequence essential_subsequence(const KeySequence& omega);

SemigroupDecision semigroup_member(const std::vector<long long>& generators,
                                   long long target);

NormalFormCheck normal_form_check(const KeySequence& omega);

// The two forbidden-value families of clause N1(d) at insertion position j
// (1 < j <= n): sum_{i<j}(alpha_i-1) omega_i + m omega_0 (m >= 0) and
// sum_{2<=i<j}(alpha_i-1) omega_i + alpha_1 omega_1 - omega_0.
bool hits_excluded_value(const KeySequence& omega, const GcdLadder& ladder,
                         int j, long long value);

// Throws InvalidKeySequence unless omega satisfies properties 1-3.
void require_key(const KeySequence& omega);
void require_primitive(const KeySequence& omega);

bool is_key_sequence(const std::vector<long long>& omega);
bool is_primitive(const KeySequence& omega);
bool is_algebraic(const KeySequence& omega);
bool is_essential(const KeySequence& omega);

}  // namespace pnc

#pragma once

#include <optional>

#include "pnc/keyseq.hpp"

namespace pnc {

enum class AutCase { PGL3, weighted_w0_eq_1, weighted_w0_gt_1, general };

const char* to_string(AutCase c);

// Parameter counts only; no group presentations.
struct AutDescriptor {
  AutCase kase = AutCase::general;
  int torus_rank = 0;
  bool finite = false;
  std::optional<long long> finite_part_order;  // omega-hat in the general case
  long long unipotent_dim = 0;  // f(x) translation parameters plus b-freedom
  std::optional<long long> omega_hat;
  bool b_free = false;
  long long f_degree_bound = -1;  // floor(q_omega / omega_0); < 0 forces f == 0
};

AutDescriptor aut_group(const KeySequence& omega);
bool aut_is_finite(const KeySequence& omega);

enum class ModuliMode { fixed_sequence, essential_family, curve_family };

const char* to_string(ModuliMode m);

// One torus-action column: theta -> lambda_1^mu lambda_2^{-beta0} theta.
struct ActionExponent {
  long long mu = 0;
  long long beta0 = 0;
};

struct CheckCoordinate {
  int stratum = 0;  // insertion stratum k
  long long value = 0;
  bool algebraic = false;
  ActionExponent exponent;
};

struct ModuliReport {
  ModuliMode mode = ModuliMode::fixed_sequence;
  int n = 0;
  long long m = 0;
  long long torus_dim = 0;
  std::vector<ActionExponent> theta_exponents;
  std::vector<CheckCoordinate> check_coordinates;
  std::vector<std::vector<long long>> omega_check_sets;
  std::vector<std::vector<long long>> omega_check_alg_sets;
  std::vector<std::vector<long long>> excluded_sets;  // within the interval
  std::optional<ActionExponent> b_slot;               // curve families
};

ModuliReport moduli_fixed(const KeySequence& omega);
ModuliReport moduli_essential(const KeySequence& omega);
ModuliReport curve_moduli(const std::vector<long long>& delta_seq);

// Homogeneity degrees mu_1..mu_n of the thetas in the series coefficients.
std::vector<long long> moduli_mu(const KeySequence& omega);

enum class G2aShape { affine_translations, y_translations_only, none };

const char* to_string(G2aShape s);

struct G2aReport {
  long long q_omega = 0;
  bool admits_action = false;
  bool picard1_g2a = false;
  G2aShape action_shape = G2aShape::none;
  long long translation_param_dim = 0;
};

G2aReport g2a_report(const KeySequence& omega);

}  // namespace pnc

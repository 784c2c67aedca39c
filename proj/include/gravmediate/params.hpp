// Copyright 2026 The gravmediate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// SI physical setups and their mapping onto the dimensionless
// qubit-oscillator-qubit model. This is the only place SI units appear in
// the dynamics pipeline.

#include "gravmediate/types.hpp"

namespace gm {

/// Three-body setup in SI units. Masses equal to zero are derived from the
/// radius and density; d equal to zero is derived from the comparison
/// distance D (see derive_model).
struct PhysicalSetup {
  double m_a = 0.0;             // test mass (kg)
  double m_c = 0.0;             // mediator mass (kg)
  double r = 0.0;               // test-mass radius (m)
  double R = 0.0;               // mediator radius (m)
  double rho_a = 0.0;           // test-mass density (kg/m^3)
  double rho_c = 0.0;           // mediator density (kg/m^3)
  double d = 0.0;               // centre distance A-C (m)
  double d0 = 0.0;              // double-well splitting (m)
  double D = 0.0;               // centre distance of the direct two-mass comparison (m)
  double omega = 0.0;           // bare mediator trap frequency (rad/s)
  double omega0 = 0.0;          // bare ancilla splitting (rad/s)
  double eps_r = 1.0;           // relative dielectric constant
  double g_b_over_omega = 0.0;  // ancilla-mediator coupling in units of the mediator frequency
  double V2_b = 0.0;            // quadratic coefficient of the B-C potential (J/m^2)
  double nbar0 = 0.0;           // initial mediator thermal occupation

  /// Silica test mass r = 70 nm with a mediator of radius alpha * r,
  /// d0 = 500 nm, D = 166 um, omega = 100 rad/s.
  static PhysicalSetup silica_example(double alpha = 100.0, double g_b_over_omega = 1.0);
};

/// Effective model in angular-frequency units (rad/s).
struct ModelParams {
  double omega_tilde = 1.0;
  double omega_a = 0.0;
  double omega_b = 0.0;
  double g_a = 0.0;
  double g_b = 0.0;
  double nbar0 = 0.0;
  Index N = 0;  // Fock truncation

  void validate() const;

  /// Couplings in units of omega_tilde (omega_tilde = 1). N = 0 selects
  /// suggest_truncation.
  static ModelParams dimensionless(double g_a, double g_b, double nbar0, Index N = 0);
};

struct DerivedModel {
  ModelParams params;
  double m_a = 0.0;
  double m_c = 0.0;
  double d = 0.0;                 // distance actually used (m)
  double delta_x = 0.0;           // predicted maximum position spread (m)
  double zero_point_length = 0.0; // sqrt(hbar / (2 m_c omega_tilde)) (m)
  bool linearization_warning = false;
};

double sphere_mass(double rho, double radius);

/// sqrt(hbar / (2 m omega)).
double zero_point_length(double mass, double omega);

/// Position spread that saturates the coupling bound:
/// x_zpf * sqrt(nbar0 + 4 (g_b/omega_tilde)^2).
double position_spread(double m_c, double omega_tilde, double g_b_over_omega, double nbar0);

/// Squared effective mediator frequency omega^2 - 2 G m_a / d^3 + 2 V2_b / m_c.
double effective_frequency_squared(double omega, double m_a, double m_c, double d, double V2_b);

/// Ratio |+-d0/2 - delta_x| / d above which the linear expansion is flagged.
inline constexpr double kLinearizationThreshold = 0.1;

DerivedModel derive_model(const PhysicalSetup& setup,
                          double linearization_threshold = kLinearizationThreshold);

/// Largest admissible g_b / omega_tilde for a position spread delta_x:
/// (1/2) sqrt(2 m_c omega_tilde delta_x^2 / hbar - nbar0).
double coupling_bound(double m_c, double omega_tilde, double delta_x, double nbar0);
double coupling_bound(const PhysicalSetup& setup, double delta_x, double nbar0);

/// Photon-number distribution of a thermal state displaced by |beta|,
/// untruncated, for levels 0..n_max-1.
RVector displaced_thermal_distribution(double nbar0, double beta_abs, Index n_max);

/// Smallest N for which the thermal state keeps >= 1 - 1e-9 of its weight and
/// the most displaced branch leaves < 1e-9 in the top two levels.
Index suggest_truncation(const ModelParams& params);

}  // namespace gm

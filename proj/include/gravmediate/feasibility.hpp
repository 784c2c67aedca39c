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

// Casimir threshold and enhancement-ratio calculators (SI units).

#include <vector>

#include "gravmediate/params.hpp"

namespace gm {

struct CasimirInput {
  double r_a = 0.0;
  double r_b = 0.0;
  double rho_a = 0.0;
  double rho_b = 0.0;
  double eps_r = 1.0;
  double beta = 10.0;  // required |V_g| / V_c
  double d_s = 0.0;    // surface-to-surface distance
  double validity_ratio = 0.1;  // formula trusted while r < validity_ratio * d_s
};

struct CasimirResult {
  double energy = 0.0;  // J
  bool valid = true;
};

/// ((eps_r - 1) / (eps_r + 2))^2.
double polarizability_factor(double eps_r);

/// 23 hbar c r_a^3 r_b^3 / (4 pi d_s^7) * polarizability_factor.
CasimirResult casimir_potential(const CasimirInput& in);

/// -G m_a m_b / (d_s + r_a + r_b).
double gravitational_energy(double m_a, double m_b, double d_s, double r_a, double r_b);

/// Closed-form threshold that treats the gravitational distance as d_s.
double min_separation(double rho_a, double rho_b, double eps_r, double beta);

/// |V_g| / V_c at in.d_s. With point_convention the gravitational distance is
/// d_s itself, otherwise d_s + r_a + r_b.
double casimir_ratio(const CasimirInput& in, bool point_convention);

/// Root of casimir_ratio(d_s, centre distance) = beta by bisection to 1e-12 relative.
double min_separation_exact(const CasimirInput& in);

/// 2 (m_c dx / (m_a d0)) / (1 + dR/D)^3.
double enhancement_ratio(double m_a, double m_c, double delta_x, double d0, double delta_R,
                         double D);

struct EnhancementEstimate {
  double ratio = 0.0;
  double delta_x = 0.0;
  bool small_splitting_warning = false;  // d0 / D > 0.1
};

/// Enhancement ratio with delta_x from derive_model's fixed-point definition.
EnhancementEstimate enhancement_ratio(const PhysicalSetup& setup);

/// sqrt(alpha^3) / (1 + (alpha - 1) 4e-4)^3 * 1e-3 * g_b_over_omega.
double enhancement_parametric(double alpha, double g_b_over_omega);

struct EnhancementRow {
  double alpha = 0.0;
  double parametric = 0.0;
  double derived = 0.0;
  double ratio = 0.0;  // derived / parametric
};

/// For each alpha, rescales the mediator radius to alpha * r and evaluates both
/// the parametric form and the derived ratio.
std::vector<EnhancementRow> enhancement_vs_alpha(const PhysicalSetup& setup,
                                                 const std::vector<double>& alphas);

}  // namespace gm

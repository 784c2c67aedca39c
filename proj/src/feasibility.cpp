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

#include "gravmediate/feasibility.hpp"

#include <cmath>

#include "gravmediate/constants.hpp"

namespace gm {

namespace {

void positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

double polarizability_factor(double eps_r) {
  positive(eps_r, "eps_r");
  const double f = (eps_r - 1.0) / (eps_r + 2.0);
  return f * f;
}

CasimirResult casimir_potential(const CasimirInput& in) {
  positive(in.r_a, "r_a");
  positive(in.r_b, "r_b");
  positive(in.d_s, "d_s");
  CasimirResult out;
  const double d2 = in.d_s * in.d_s;
  const double d7 = d2 * d2 * d2 * in.d_s;
  out.energy = 23.0 * constants::hbar * constants::c * std::pow(in.r_a * in.r_b, 3) /
               (4.0 * constants::pi * d7) * polarizability_factor(in.eps_r);
  out.valid = in.r_a < in.validity_ratio * in.d_s && in.r_b < in.validity_ratio * in.d_s;
  return out;
}

double gravitational_energy(double m_a, double m_b, double d_s, double r_a, double r_b) {
  positive(m_a, "m_a");
  positive(m_b, "m_b");
  positive(d_s, "d_s");
  if (r_a < 0.0 || r_b < 0.0) throw DomainError("radii must be >= 0");
  return -constants::G * m_a * m_b / (d_s + r_a + r_b);
}

double min_separation(double rho_a, double rho_b, double eps_r, double beta) {
  positive(rho_a, "rho_a");
  positive(rho_b, "rho_b");
  positive(beta, "beta");
  const double four_pi = 4.0 * constants::pi;
  return std::pow(207.0 * constants::hbar * constants::c /
                      (four_pi * four_pi * four_pi * constants::G * rho_a * rho_b) *
                      polarizability_factor(eps_r) * beta,
                  1.0 / 6.0);
}

double casimir_ratio(const CasimirInput& in, bool point_convention) {
  const double m_a = sphere_mass(in.rho_a, in.r_a);
  const double m_b = sphere_mass(in.rho_b, in.r_b);
  const double vg = point_convention ? gravitational_energy(m_a, m_b, in.d_s, 0.0, 0.0)
                                     : gravitational_energy(m_a, m_b, in.d_s, in.r_a, in.r_b);
  return std::abs(vg) / casimir_potential(in).energy;
}

double min_separation_exact(const CasimirInput& in) {
  positive(in.beta, "beta");
  // The ratio grows monotonically with d_s (~d_s^6), so bracket and bisect.
  CasimirInput probe = in;
  double lo = min_separation(in.rho_a, in.rho_b, in.eps_r, in.beta);
  double hi = lo;
  probe.d_s = lo;
  while (casimir_ratio(probe, false) > in.beta) {
    lo *= 0.5;
    probe.d_s = lo;
  }
  probe.d_s = hi;
  while (casimir_ratio(probe, false) < in.beta) {
    hi *= 2.0;
    probe.d_s = hi;
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    probe.d_s = mid;
    (casimir_ratio(probe, false) < in.beta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double enhancement_ratio(double m_a, double m_c, double delta_x, double d0, double delta_R,
                         double D) {
  positive(m_a, "m_a");
  positive(m_c, "m_c");
  positive(d0, "d0");
  positive(D, "D");
  if (delta_x < 0.0) throw DomainError("delta_x must be >= 0");
  const double s = 1.0 + delta_R / D;
  return 2.0 * m_c * delta_x / (m_a * d0) / (s * s * s);
}

EnhancementEstimate enhancement_ratio(const PhysicalSetup& setup) {
  const DerivedModel m = derive_model(setup);
  EnhancementEstimate out;
  out.delta_x = m.delta_x;
  out.ratio = enhancement_ratio(m.m_a, m.m_c, m.delta_x, setup.d0, setup.R - setup.r, setup.D);
  out.small_splitting_warning = setup.d0 / setup.D > 0.1;
  return out;
}

double enhancement_parametric(double alpha, double g_b_over_omega) {
  if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
  const double s = 1.0 + (alpha - 1.0) * 4e-4;
  return std::sqrt(alpha * alpha * alpha) / (s * s * s) * 1e-3 * g_b_over_omega;
}

std::vector<EnhancementRow> enhancement_vs_alpha(const PhysicalSetup& setup,
                                                 const std::vector<double>& alphas) {
  std::vector<EnhancementRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    PhysicalSetup s = setup;
    s.R = alpha * setup.r;
    s.m_c = 0.0;
    EnhancementRow row;
    row.alpha = alpha;
    row.parametric = enhancement_parametric(alpha, setup.g_b_over_omega);
    row.derived = enhancement_ratio(s).ratio;
    row.ratio = row.derived / row.parametric;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gm

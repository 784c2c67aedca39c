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

#include "gravmediate/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gravmediate/constants.hpp"

namespace gm {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

PhysicalSetup PhysicalSetup::silica_example(double alpha, double g_b_over_omega) {
  PhysicalSetup s;
  s.r = 70e-9;
  s.R = alpha * s.r;
  s.rho_a = 2400.0;
  s.rho_c = 2400.0;
  s.d0 = 500e-9;
  s.D = 166e-6;
  s.omega = 100.0;
  s.omega0 = 0.0;
  s.eps_r = 4.0;
  s.g_b_over_omega = g_b_over_omega;
  return s;
}

void ModelParams::validate() const {
  if (!(omega_tilde > 0.0) || !std::isfinite(omega_tilde)) {
    throw DomainError("model: omega_tilde must be positive");
  }
  if (!std::isfinite(g_a) || !std::isfinite(g_b) || !std::isfinite(omega_a) ||
      !std::isfinite(omega_b)) {
    throw DomainError("model: non-finite frequency or coupling");
  }
  if (!(nbar0 >= 0.0) || !std::isfinite(nbar0)) throw DomainError("model: nbar0 must be >= 0");
  if (N < 2) throw DomainError("model: Fock truncation must be at least 2");
}

ModelParams ModelParams::dimensionless(double g_a, double g_b, double nbar0, Index N) {
  ModelParams p;
  p.omega_tilde = 1.0;
  p.g_a = g_a;
  p.g_b = g_b;
  p.nbar0 = nbar0;
  p.N = N > 0 ? N : suggest_truncation(p);
  p.validate();
  return p;
}

double sphere_mass(double rho, double radius) {
  require_positive(rho, "density");
  require_positive(radius, "radius");
  return rho * 4.0 / 3.0 * constants::pi * radius * radius * radius;
}

double zero_point_length(double mass, double omega) {
  require_positive(mass, "mass");
  require_positive(omega, "frequency");
  return std::sqrt(constants::hbar / (2.0 * mass * omega));
}

double position_spread(double m_c, double omega_tilde, double g_b_over_omega, double nbar0) {
  return zero_point_length(m_c, omega_tilde) *
         std::sqrt(nbar0 + 4.0 * g_b_over_omega * g_b_over_omega);
}

double effective_frequency_squared(double omega, double m_a, double m_c, double d, double V2_b) {
  return omega * omega - 2.0 * constants::G * m_a / (d * d * d) + 2.0 * V2_b / m_c;
}

DerivedModel derive_model(const PhysicalSetup& s, double linearization_threshold) {
  DerivedModel out;
  out.m_a = s.m_a > 0.0 ? s.m_a : sphere_mass(s.rho_a, s.r);
  out.m_c = s.m_c > 0.0 ? s.m_c : sphere_mass(s.rho_c, s.R);
  require_positive(out.m_a, "m_a");
  require_positive(out.m_c, "m_c");
  require_positive(s.d0, "d0");
  require_positive(s.omega, "omega");
  if (!(s.nbar0 >= 0.0)) throw DomainError("nbar0 must be >= 0");
  if (s.omega0 < 0.0) throw DomainError("omega0 must be >= 0");

  const auto omega_tilde_at = [&](double d) {
    const double w2 = effective_frequency_squared(s.omega, out.m_a, out.m_c, d, s.V2_b);
    if (!(w2 > 0.0)) {
      throw UnstableLinearization("unstable linearization: effective frequency squared is " +
                                  std::to_string(w2));
    }
    return std::sqrt(w2);
  };

  double d = s.d;
  double omega_tilde = 0.0;
  if (d > 0.0) {
    omega_tilde = omega_tilde_at(d);
    out.delta_x = position_spread(out.m_c, omega_tilde, s.g_b_over_omega, s.nbar0);
  } else {
    require_positive(s.D, "D (or d)");
    // One fixed-point pass: spread at the geometric distance, then shift d by
    // half of it.
    const double delta_r = s.R - s.r;
    const double d_first = s.D + delta_r - s.d0 / 2.0;
    require_positive(d_first, "D + (R - r) - d0/2");
    omega_tilde = omega_tilde_at(d_first);
    out.delta_x = position_spread(out.m_c, omega_tilde, s.g_b_over_omega, s.nbar0);
    d = d_first + out.delta_x / 2.0;
    omega_tilde = omega_tilde_at(d);
    out.delta_x = position_spread(out.m_c, omega_tilde, s.g_b_over_omega, s.nbar0);
  }
  if (s.r > 0.0 && s.R > 0.0 && !(d > s.R + s.r + s.d0 / 2.0)) {
    throw DomainError("setup: bodies overlap (d <= R + r + d0/2)");
  }
  out.d = d;
  out.zero_point_length = zero_point_length(out.m_c, omega_tilde);
  out.linearization_warning = (s.d0 / 2.0 + out.delta_x) >= linearization_threshold * d;

  ModelParams& p = out.params;
  p.omega_tilde = omega_tilde;
  p.omega_a = constants::G * out.m_a * out.m_c * s.d0 / (2.0 * constants::hbar * d * d);
  p.omega_b = s.omega0;
  p.g_a = -(constants::G * out.m_a * s.d0 / (d * d * d)) *
          std::sqrt(out.m_c / (2.0 * omega_tilde * constants::hbar));
  p.g_b = s.g_b_over_omega * omega_tilde;
  p.nbar0 = s.nbar0;
  p.N = suggest_truncation(p);
  p.validate();
  return out;
}

double coupling_bound(double m_c, double omega_tilde, double delta_x, double nbar0) {
  require_positive(m_c, "m_c");
  require_positive(omega_tilde, "omega_tilde");
  if (!(delta_x >= 0.0)) throw DomainError("coupling_bound: delta_x must be >= 0");
  const double radicand = 2.0 * m_c * omega_tilde * delta_x * delta_x / constants::hbar - nbar0;
  if (radicand < 0.0) {
    throw DomainError("coupling_bound: nbar0 exceeds the occupation allowed by delta_x");
  }
  return 0.5 * std::sqrt(radicand);
}

double coupling_bound(const PhysicalSetup& setup, double delta_x, double nbar0) {
  const DerivedModel m = derive_model(setup);
  return coupling_bound(m.m_c, m.params.omega_tilde, delta_x, nbar0);
}

RVector displaced_thermal_distribution(double nbar0, double beta_abs, Index n_max) {
  RVector p = RVector::Zero(n_max);
  if (n_max == 0) return p;
  const double x = beta_abs * beta_abs;
  if (nbar0 == 0.0) {
    // Poisson.
    double term = std::exp(-x);
    for (Index n = 0; n < n_max; ++n) {
      p(n) = term;
      term *= x / double(n + 1);
    }
    return p;
  }
  // P(n) = r^n/(1+nbar) exp(-x/(1+nbar)) L_n(-x/(nbar(1+nbar))), r = nbar/(1+nbar),
  // carried as q_n = r^n L_n(y) to stay in range.
  const double ratio = nbar0 / (1.0 + nbar0);
  const double y = -x / (nbar0 * (1.0 + nbar0));
  const double pref = std::exp(-x / (1.0 + nbar0)) / (1.0 + nbar0);
  double q_prev = 0.0;
  double q = 1.0;
  for (Index n = 0; n < n_max; ++n) {
    p(n) = pref * q;
    const double q_next =
        ratio * ((2.0 * double(n) + 1.0 - y) * q - double(n) * ratio * q_prev) / double(n + 1);
    q_prev = q;
    q = q_next;
  }
  return p;
}

Index suggest_truncation(const ModelParams& params) {
  if (!(params.omega_tilde > 0.0)) throw DomainError("suggest_truncation: omega_tilde must be positive");
  if (!(params.nbar0 >= 0.0)) throw DomainError("suggest_truncation: nbar0 must be >= 0");
  constexpr double tol = 1e-9;
  const double beta_max = 2.0 * (std::abs(params.g_a) + std::abs(params.g_b)) / params.omega_tilde;

  // Grow the evaluation window until the distribution's tail is resolved.
  Index window = 64;
  for (;;) {
    const RVector displaced = displaced_thermal_distribution(params.nbar0, beta_max, window);
    const RVector thermal = displaced_thermal_distribution(params.nbar0, 0.0, window);
    // tail_from[k] = sum_{n >= k} P(n), estimated as 1 - sum_{n < k}.
    double head_displaced = 0.0;
    double head_thermal = 0.0;
    for (Index n = 0; n + 1 < window; ++n) {
      head_displaced += displaced(n);
      head_thermal += thermal(n);
      const Index N = n + 1;
      if (N < 3) continue;
      // Weight in levels >= N-2, i.e. the top two levels and beyond.
      double tail_top = 1.0;
      for (Index k = 0; k < N - 2; ++k) tail_top -= displaced(k);
      if (tail_top < tol && (1.0 - head_thermal) < tol) return N;
    }
    window *= 2;
    if (window > (Index(1) << 16)) {
      throw TruncationError("suggest_truncation: no truncation below 65536 levels");
    }
  }
}

}  // namespace gm

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

// Gradient noise with instantaneous pi-pulse decoupling. Pulses are modelled
// as sign flips F(t) of the sigma_z terms (toggling frame). Unitaries are
// given in the frame rotating with omega_tilde n; at decoupling times this
// coincides with the lab frame on the oscillator.

#include <array>
#include <cstdint>
#include <vector>

#include "gravmediate/fock.hpp"
#include "gravmediate/noise.hpp"
#include "gravmediate/params.hpp"
#include "gravmediate/quadrature.hpp"

namespace gm {

struct PulseSequence {
  std::vector<double> flip_times;
  double t_end = 0.0;

  static PulseSequence none(double t_end);

  /// +1 before the first flip; right-continuous.
  double F(double t) const;
  /// Smallest gap between consecutive flips (t_end if fewer than two).
  double min_spacing() const;
  void validate() const;
};

enum class DDStyle { Equidistant, PeriodLocked };

std::string to_string(DDStyle style);
DDStyle dd_style_from_string(const std::string& name);

/// Equidistant: flips at t_end * j / (n + 1). PeriodLocked: t_end must be a
/// whole number m of half periods pi/omega_tilde and n_pulses = k m with k
/// even; flips at (i + (j - 1/2)/k) pi/omega_tilde, so F(t) = F(t + pi/omega_tilde).
PulseSequence dd_sequence(int n_pulses, double t_end, DDStyle style, double omega_tilde);

/// Default quadrature settings: panels no wider than 1/128 of a period.
quad::Options default_quadrature(double omega_tilde);

/// F_bar(t) = int_0^t F e^{-i omega t'} dt'.
Complex pulse_filter(const PulseSequence& F, double omega_tilde, double t,
                     const quad::Options& opt);

struct FilterIntegrals {
  Complex chi_a;  // -2i T[F_a, eta_c]
  Complex chi_b;  // -2i T[F_b, eta_c]
  Complex xi;     // -2i T[F_a, F_b]
  Complex F_bar_a;
  Complex F_bar_b;
};

FilterIntegrals dd_filter_integrals(const PulseSequence& Fa, const PulseSequence& Fb,
                                    const NoiseRealization& noise, double omega_tilde, double t,
                                    const quad::Options& opt);

/// U_s = exp(i phase_s) D(beta_s) for the sectors (+,+), (+,-), (-,+), (-,-).
struct SectorEvolution {
  std::array<double, 4> phase{};
  std::array<Complex, 4> beta{};
};

SectorEvolution noisy_sector_evolution(const ModelParams& params, const NoiseRealization& noise,
                                       const PulseSequence& Fa, const PulseSequence& Fb, double t,
                                       const quad::Options& opt);

OperatorMatrix sector_unitary_matrix(const SectorEvolution& ev, Index n_levels);

OperatorMatrix noisy_unitary(const ModelParams& params, const NoiseRealization& noise,
                             const PulseSequence& Fa, const PulseSequence& Fb, double t,
                             const quad::Options& opt);

/// Factors of the unpulsed noisy unitary at a decoupling time:
/// exp(-i theta_a sz_a) exp(-i theta_b sz_b) exp(i zz sz_a sz_b)
/// exp(-i (eta_tilde_c a + conj(eta_tilde_c) a^dag)) exp(i global_phase).
struct NoiseFactors {
  double theta_a = 0.0;     // omega_a t + eta_bar_a - g_a eta_tt
  double theta_b = 0.0;
  double zz = 0.0;          // 2 g_a g_b t_n / omega_tilde
  double global_phase = 0.0;
  Complex eta_tilde_c;      // int eta_c e^{-i omega t}
  double eta_bar_a = 0.0;
  double eta_bar_b = 0.0;
  double eta_tt = 0.0;      // T[1, eta_c]
};

NoiseFactors noise_factors(const ModelParams& params, const NoiseRealization& noise, double t_n,
                           const quad::Options& opt);

OperatorMatrix noisy_unitary_closed(const ModelParams& params, const NoiseRealization& noise,
                                    double t_n, const quad::Options& opt);

struct PhaseStats {
  double mean = 0.0;
  double variance = 0.0;
};

struct MonteCarloOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  quad::Options quadrature;  // max_panel 0 selects default_quadrature
};

struct MonteCarloResult {
  int n_realizations = 0;
  CMatrix rho_ab;               // ensemble-averaged two-qubit state
  double ln = 0.0;              // log negativity of rho_ab
  double ln_noiseless = 0.0;    // same pulses, eta = 0
  PhaseStats theta_a;
  PhaseStats theta_b;
  PhaseStats theta_ab;
  std::vector<CMatrix> samples; // per-realization rho_ab
};

/// Averages the two-qubit state over independent noise realizations, with
/// qubits starting in |+>|+> and the mediator thermal.
MonteCarloResult dephasing_monte_carlo(const ModelParams& params, const NoiseSpec& spec,
                                       const PulseSequence& Fa, const PulseSequence& Fb,
                                       int n_realizations, double t_n,
                                       const MonteCarloOptions& opt = {});

/// Paired bootstrap of LN(a) - LN(b) over realizations; returns the requested
/// lower quantile.
double bootstrap_ln_difference(const MonteCarloResult& a, const MonteCarloResult& b, int n_boot,
                               double quantile, std::uint64_t seed);

}  // namespace gm

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

// Closed-form evolution of the qubit-oscillator-qubit model. The Hamiltonian
// commutes with both sigma_z operators, so every operator here is assembled
// from four oscillator blocks, one per sector (s_a, s_b).

#include <array>
#include <cmath>
#include <vector>

#include "gravmediate/fock.hpp"
#include "gravmediate/params.hpp"

namespace gm {

/// Interaction picture with respect to omega_a sz_a + omega_b sz_b + omega_tilde n,
/// or the lab frame.
enum class Frame { Interaction, Lab };

/// Qubit index 0 carries sigma_z = +1.
constexpr int sector_sign(Index qubit_index) { return qubit_index == 0 ? 1 : -1; }
/// Flat sector index 2*i_a + i_b in the canonical A, B, C layout.
constexpr Index sector_index(int s_a, int s_b) { return (s_a > 0 ? 0 : 2) + (s_b > 0 ? 0 : 1); }

/// (exp(-i w t) - 1) / w.
Complex alpha_t(double omega_tilde, double t);
/// (t - sin(w t)/w) / w.
double magnus_phase_integral(double omega_tilde, double t);

struct BranchAmplitude {
  int s_a = 1;
  int s_b = 1;
  Complex alpha;      // displacement of the branch in the interaction picture
  double phase = 0.0; // geometric phase lambda^2 (t - sin(w t)/w) / w

  double x() const { return std::sqrt(2.0) * alpha.real(); }
  double p() const { return std::sqrt(2.0) * alpha.imag(); }
};

/// Ordered (+,+), (+,-), (-,+), (-,-).
std::array<BranchAmplitude, 4> branch_trajectories(const ModelParams& params, double t);

OperatorMatrix closed_form_unitary(const ModelParams& params, double t,
                                   Frame frame = Frame::Interaction);

/// (|L> + |R>)/sqrt2 (x) (|0> + |1>)/sqrt2 (x) thermal(nbar0) on params.N levels.
QuantumState default_initial_state(const ModelParams& params);

/// U rho U^dag on the full A, B, C space.
QuantumState evolve(const ModelParams& params, const QuantumState& initial, double t,
                    Frame frame = Frame::Interaction);

/// Reduced state of U rho U^dag on `keep`, computed without forming the full
/// evolved state when the oscillator is traced out.
QuantumState evolve_reduced(const ModelParams& params, const QuantumState& initial, double t,
                            FactorSet keep, Frame frame = Frame::Interaction);

double mean_phonon(const ModelParams& params, double t);

/// t_n = 2 pi n / omega_tilde for n = 1..n_max.
std::vector<double> decoupling_times(const ModelParams& params, int n_max);

}  // namespace gm

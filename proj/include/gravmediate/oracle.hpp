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

// Brute-force evolution of the qubit-oscillator-qubit Hamiltonian on the
// truncated space. Shares only the fock primitives with the closed form.

#include <array>
#include <functional>
#include <vector>

#include "gravmediate/dynamics.hpp"
#include "gravmediate/eigensolver.hpp"
#include "gravmediate/fock.hpp"
#include "gravmediate/params.hpp"

namespace gm {

enum class OracleMethod { SectorEigen, Integrator };

struct OracleConfig {
  Index N = 0;  // 0 selects params.N
  OracleMethod method = OracleMethod::SectorEigen;
  double dt = 0.0;  // integrator step in units of 1/omega_tilde; 0 selects 1e-3 of a period
  Frame frame = Frame::Lab;
};

/// omega_tilde n + lambda_s (a + a^dag) + omega_a s_a + omega_b s_b for the
/// sectors (+,+), (+,-), (-,+), (-,-).
std::array<RMatrix, 4> sector_hamiltonians(const ModelParams& params, Index n_levels);

/// Full 4N x 4N Hamiltonian in the canonical layout.
OperatorMatrix hamiltonian(const ModelParams& params, Index n_levels);

/// Per-sector eigendecompositions, reusable across times.
class SectorOracle {
 public:
  SectorOracle(const ModelParams& params, Index n_levels);

  Index levels() const { return n_; }
  const linalg::EigenSystem<double>& sector(Index k) const { return eig_[static_cast<std::size_t>(k)]; }

  /// exp(-i H_s t), optionally rotated into the interaction picture.
  CMatrix sector_unitary(Index k, double t, Frame frame) const;
  OperatorMatrix unitary(double t, Frame frame) const;
  QuantumState evolve(const QuantumState& initial, double t, Frame frame) const;

 private:
  ModelParams params_;
  Index n_;
  std::array<linalg::EigenSystem<double>, 4> eig_;
};

QuantumState evolve_numeric(const ModelParams& params, const QuantumState& initial, double t,
                            const OracleConfig& config = {});

/// Tr(rho op) for density states, psi^dag op psi for pure states.
Complex expectation(const QuantumState& state, const OperatorMatrix& op);
Complex expectation(const QuantumState& state, const CMatrix& op);

/// Time-dependent oscillator block H(t) = omega_tilde n + mu(t) (a + a^dag) + e(t).
/// Both coefficients are smooth inside each piece [breakpoints[p], breakpoints[p+1]]
/// and receive the piece index so that jumps at breakpoints are resolved.
struct SectorDrive {
  std::vector<double> breakpoints;  // ascending, first 0, last t_end
  std::function<double(double, std::size_t)> mu;
  std::function<double(double, std::size_t)> scalar;
};

/// Fourth-order Runge-Kutta propagation in the frame rotating with
/// omega_tilde n, steps aligned to the breakpoints. Returns the first
/// `columns` columns of U(t_end).
CMatrix time_ordered_propagator(double omega_tilde, Index n_levels, const SectorDrive& drive,
                                double max_step, Index columns, Frame frame);

}  // namespace gm

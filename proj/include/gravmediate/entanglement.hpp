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

// Logarithmic negativity of simulated states and the analytic two-qubit
// formulas for the mediated and direct setups.

#include <array>
#include <string>
#include <vector>

#include "gravmediate/dynamics.hpp"
#include "gravmediate/fock.hpp"
#include "gravmediate/params.hpp"

namespace gm {

struct Bipartition {
  FactorSet side_one;
  FactorSet side_two;  // the transposed side
  std::string name;

  Bipartition(FactorSet one, FactorSet two, std::string label = {});

  FactorSet support() const { return side_one | side_two; }
  Bipartition swapped() const { return Bipartition(side_two, side_one, name); }

  static Bipartition ab() { return {{Subsystem::A}, {Subsystem::B}, "AB"}; }
  /// A against C with B traced out.
  static Bipartition ac() { return {{Subsystem::A}, {Subsystem::C}, "AC"}; }
  static Bipartition c_ab() { return {{Subsystem::C}, {Subsystem::A, Subsystem::B}, "C|AB"}; }
  static Bipartition a_bc() { return {{Subsystem::A}, {Subsystem::B, Subsystem::C}, "A|BC"}; }
};

/// max(0, log2 ||rho^T||_1). Factors outside the bipartition are traced out.
double log_negativity(const QuantumState& state, const Bipartition& cut);

/// max(0, log2(1 + |sin phi|)).
double ln_from_phase(double phi);

/// phi_m = 4 g_a g_b t_n / omega_tilde.
double mediated_phase(const ModelParams& params, int n);
double ln_mediated_at_tn(const ModelParams& params, int n);

/// Entangling phase of two masses interacting directly, in the argument
/// convention of ln_from_phase. Inputs in SI units.
double phi_direct(double m_a, double m_b, double D, double d0, double t);
double ln_direct(double m_a, double m_b, double D, double d0, double t);

/// Diagonal Newtonian energies (J) in the order LL, LR, RL, RR.
RMatrix direct_hamiltonian(double m_a, double m_b, double D, double d0);

/// exp(-i H t / hbar) applied to |+>|+>.
QuantumState evolve_direct(double m_a, double m_b, double D, double d0, double t);

/// exp(-i omega_t sz (x) sz) |+>|+>, with omega_t the product Omega * t.
QuantumState two_qubit_state(double omega_t);

struct TimeSeriesResult {
  std::vector<double> t;
  std::vector<Bipartition> cuts;
  std::vector<std::vector<double>> ln;  // ln[cut][time]
  std::vector<double> n_mean;
  std::vector<std::array<BranchAmplitude, 4>> branches;
  bool truncation_leak = false;

  const std::vector<double>& series(const std::string& cut_name) const;
};

/// Grid t = (2 pi / omega_tilde) * i / samples_per_period, i = 0..periods*samples_per_period.
std::vector<double> period_grid(const ModelParams& params, int periods,
                                int samples_per_period = 512);

TimeSeriesResult ln_timeseries(const ModelParams& params, const std::vector<double>& grid,
                               const std::vector<Bipartition>& cuts);
TimeSeriesResult ln_timeseries(const ModelParams& params, const QuantumState& initial,
                               const std::vector<double>& grid,
                               const std::vector<Bipartition>& cuts);

/// Full width at half maximum of the peak of y closest to t_center, using
/// linear interpolation of the half-maximum crossings. Throws DomainError if a
/// crossing is not inside the sampled range.
double peak_fwhm(const std::vector<double>& t, const std::vector<double>& y, double t_center);

}  // namespace gm

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

#include "gravmediate/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gravmediate/constants.hpp"
#include "gravmediate/eigensolver.hpp"

namespace gm {

Bipartition::Bipartition(FactorSet one, FactorSet two, std::string label)
    : side_one(one), side_two(two), name(std::move(label)) {
  if (one.empty() || two.empty()) throw DomainError("bipartition: sides must be non-empty");
  if (one.intersects(two)) throw DomainError("bipartition: sides must be disjoint");
  if (name.empty()) name = one.to_string() + "|" + two.to_string();
}

double log_negativity(const QuantumState& state, const Bipartition& cut) {
  const FactorSet present = state.layout.members();
  if (!present.includes(cut.support())) {
    throw DomainError("log_negativity: state lacks factors of bipartition " + cut.name);
  }
  const QuantumState reduced =
      present == cut.support() ? state.as_density() : partial_trace(state, cut.support());
  const OperatorMatrix pt = partial_transpose(reduced, cut.side_two);
  const double tn = trace_norm(pt.data);
  return std::max(0.0, std::log2(tn));
}

double ln_from_phase(double phi) { return std::max(0.0, std::log2(1.0 + std::abs(std::sin(phi)))); }

double mediated_phase(const ModelParams& params, int n) {
  if (n < 1) throw DomainError("mediated_phase: n must be >= 1");
  const double t_n = 2.0 * constants::pi * n / params.omega_tilde;
  return 4.0 * params.g_a * params.g_b * t_n / params.omega_tilde;
}

double ln_mediated_at_tn(const ModelParams& params, int n) {
  return ln_from_phase(mediated_phase(params, n));
}

namespace {

void check_direct(double m_a, double m_b, double D, double d0) {
  if (!(m_a > 0.0) || !(m_b > 0.0)) throw DomainError("direct: masses must be positive");
  if (!(d0 > 0.0)) throw DomainError("direct: d0 must be positive");
  if (!(D > d0)) throw DomainError("direct: D must exceed d0");
}

}  // namespace

double phi_direct(double m_a, double m_b, double D, double d0, double t) {
  check_direct(m_a, m_b, D, d0);
  const double q = (d0 / D) * (d0 / D);
  return constants::G * m_a * m_b / (constants::hbar * D) * q * t / (1.0 - q);
}

double ln_direct(double m_a, double m_b, double D, double d0, double t) {
  return ln_from_phase(phi_direct(m_a, m_b, D, d0, t));
}

RMatrix direct_hamiltonian(double m_a, double m_b, double D, double d0) {
  check_direct(m_a, m_b, D, d0);
  const double k = constants::G * m_a * m_b;
  RMatrix h = RMatrix::Zero(4, 4);
  h(0, 0) = -k / D;
  h(1, 1) = -k / (D + d0);
  h(2, 2) = -k / (D - d0);
  h(3, 3) = -k / D;
  return h;
}

QuantumState evolve_direct(double m_a, double m_b, double D, double d0, double t) {
  const RMatrix h = direct_hamiltonian(m_a, m_b, D, d0);
  // Only relative phases matter; subtracting the mean keeps the exponent small.
  const double mean = h.trace() / 4.0;
  CVector psi(4);
  for (Index i = 0; i < 4; ++i) psi(i) = 0.5 * std::exp(-kI * ((h(i, i) - mean) * t / constants::hbar));
  QuantumState s = QuantumState::pure(psi, Layout({{Subsystem::A, 2}, {Subsystem::B, 2}}));
  return s.as_density();
}

QuantumState two_qubit_state(double omega_t) {
  CVector psi(4);
  psi(0) = 0.5 * std::exp(-kI * omega_t);
  psi(1) = 0.5 * std::exp(kI * omega_t);
  psi(2) = 0.5 * std::exp(kI * omega_t);
  psi(3) = 0.5 * std::exp(-kI * omega_t);
  return QuantumState::pure(psi, Layout({{Subsystem::A, 2}, {Subsystem::B, 2}})).as_density();
}

const std::vector<double>& TimeSeriesResult::series(const std::string& cut_name) const {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].name == cut_name) return ln[i];
  }
  throw DomainError("time series: no bipartition named " + cut_name);
}

std::vector<double> period_grid(const ModelParams& params, int periods, int samples_per_period) {
  if (periods < 1 || samples_per_period < 2) throw DomainError("period_grid: invalid grid size");
  const int total = periods * samples_per_period;
  std::vector<double> t(static_cast<std::size_t>(total) + 1);
  for (int i = 0; i <= total; ++i) {
    t[static_cast<std::size_t>(i)] =
        2.0 * constants::pi * (double(i) / samples_per_period) / params.omega_tilde;
  }
  return t;
}

TimeSeriesResult ln_timeseries(const ModelParams& params, const std::vector<double>& grid,
                               const std::vector<Bipartition>& cuts) {
  return ln_timeseries(params, default_initial_state(params), grid, cuts);
}

TimeSeriesResult ln_timeseries(const ModelParams& params, const QuantumState& initial,
                               const std::vector<double>& grid,
                               const std::vector<Bipartition>& cuts) {
  TimeSeriesResult out;
  out.t = grid;
  out.cuts = cuts;
  out.ln.assign(cuts.size(), std::vector<double>(grid.size(), 0.0));
  out.n_mean.resize(grid.size());
  out.branches.resize(grid.size());
  const FactorSet all{Subsystem::A, Subsystem::B, Subsystem::C};
  bool need_full = false;
  for (const auto& c : cuts) need_full = need_full || c.support() == all;

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    out.n_mean[i] = mean_phonon(params, t);
    out.branches[i] = branch_trajectories(params, t);
    QuantumState full;
    if (need_full) {
      full = evolve(params, initial, t);
      out.truncation_leak = out.truncation_leak || full.truncation_leak;
    }
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      if (cuts[c].support() == all) {
        out.ln[c][i] = log_negativity(full, cuts[c]);
        continue;
      }
      const QuantumState red = evolve_reduced(params, initial, t, cuts[c].support());
      out.truncation_leak = out.truncation_leak || red.truncation_leak;
      out.ln[c][i] = log_negativity(red, cuts[c]);
    }
  }
  return out;
}

double peak_fwhm(const std::vector<double>& t, const std::vector<double>& y, double t_center) {
  if (t.size() != y.size() || t.size() < 3) throw DomainError("peak_fwhm: need matching samples");
  // Nearest sample to the centre, then climb to the local maximum.
  std::size_t i = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k] - t_center) < best) {
      best = std::abs(t[k] - t_center);
      i = k;
    }
  }
  for (;;) {
    if (i + 1 < y.size() && y[i + 1] > y[i]) {
      ++i;
    } else if (i > 0 && y[i - 1] > y[i]) {
      --i;
    } else {
      break;
    }
  }
  const double half = 0.5 * y[i];
  if (!(half > 0.0)) throw DomainError("peak_fwhm: peak height is zero");
  const auto cross = [&](std::size_t a, std::size_t b) {
    return t[a] + (half - y[a]) * (t[b] - t[a]) / (y[b] - y[a]);
  };
  std::size_t l = i;
  while (l > 0 && y[l - 1] >= half) --l;
  if (l == 0) throw DomainError("peak_fwhm: left half-maximum crossing outside grid");
  std::size_t r = i;
  while (r + 1 < y.size() && y[r + 1] >= half) ++r;
  if (r + 1 == y.size()) throw DomainError("peak_fwhm: right half-maximum crossing outside grid");
  return cross(r, r + 1) - cross(l - 1, l);
}

}  // namespace gm

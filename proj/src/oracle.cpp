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

#include "gravmediate/oracle.hpp"

#include <cmath>

#include "gravmediate/constants.hpp"

namespace gm {

namespace {

int sign_a(Index k) { return k / 2 == 0 ? 1 : -1; }
int sign_b(Index k) { return k % 2 == 0 ? 1 : -1; }

void require_canonical(const QuantumState& s, Index n) {
  if (!(s.layout == Layout::canonical(n))) {
    throw DomainError("oracle: state must live on the canonical layout with N = " + std::to_string(n));
  }
}

// y = (a e^{-i w t} + a^dag e^{i w t}) x, column-wise, without forming matrices.
void apply_coupling(const CMatrix& x, Complex phase, CMatrix& y) {
  const Index n = x.rows();
  for (Index c = 0; c < x.cols(); ++c) {
    for (Index i = 0; i < n; ++i) {
      Complex v = 0.0;
      if (i + 1 < n) v += std::sqrt(double(i + 1)) * phase * x(i + 1, c);
      if (i > 0) v += std::sqrt(double(i)) * std::conj(phase) * x(i - 1, c);
      y(i, c) = v;
    }
  }
}

}  // namespace

std::array<RMatrix, 4> sector_hamiltonians(const ModelParams& params, Index n_levels) {
  params.validate();
  const auto ops = ladder_ops<double>(n_levels);
  const RMatrix x = ops.a + ops.a_dag;
  std::array<RMatrix, 4> out;
  for (Index k = 0; k < 4; ++k) {
    const double lambda = params.g_a * sign_a(k) + params.g_b * sign_b(k);
    const double e = params.omega_a * sign_a(k) + params.omega_b * sign_b(k);
    out[static_cast<std::size_t>(k)] = params.omega_tilde * ops.number + lambda * x +
                                       e * RMatrix::Identity(n_levels, n_levels);
  }
  return out;
}

OperatorMatrix hamiltonian(const ModelParams& params, Index n_levels) {
  const auto blocks = sector_hamiltonians(params, n_levels);
  CMatrix h = CMatrix::Zero(4 * n_levels, 4 * n_levels);
  for (Index k = 0; k < 4; ++k) {
    h.block(k * n_levels, k * n_levels, n_levels, n_levels) =
        blocks[static_cast<std::size_t>(k)].cast<Complex>();
  }
  return {std::move(h), Layout::canonical(n_levels)};
}

SectorOracle::SectorOracle(const ModelParams& params, Index n_levels)
    : params_(params), n_(n_levels) {
  const auto blocks = sector_hamiltonians(params, n_levels);
  for (std::size_t k = 0; k < 4; ++k) eig_[k] = linalg::hermitian_eigensystem(blocks[k]);
}

CMatrix SectorOracle::sector_unitary(Index k, double t, Frame frame) const {
  const auto& es = eig_[static_cast<std::size_t>(k)];
  RVector c(n_);
  RVector s(n_);
  for (Index i = 0; i < n_; ++i) {
    c(i) = std::cos(es.values(i) * t);
    s(i) = -std::sin(es.values(i) * t);
  }
  CMatrix u(n_, n_);
  u.real() = es.vectors * c.asDiagonal() * es.vectors.transpose();
  u.imag() = es.vectors * s.asDiagonal() * es.vectors.transpose();
  if (frame == Frame::Interaction) {
    const double e = params_.omega_a * sign_a(k) + params_.omega_b * sign_b(k);
    for (Index i = 0; i < n_; ++i) {
      u.row(i) *= std::exp(kI * ((params_.omega_tilde * double(i) + e) * t));
    }
  }
  return u;
}

OperatorMatrix SectorOracle::unitary(double t, Frame frame) const {
  CMatrix u = CMatrix::Zero(4 * n_, 4 * n_);
  for (Index k = 0; k < 4; ++k) u.block(k * n_, k * n_, n_, n_) = sector_unitary(k, t, frame);
  return {std::move(u), Layout::canonical(n_)};
}

QuantumState SectorOracle::evolve(const QuantumState& initial, double t, Frame frame) const {
  require_canonical(initial, n_);
  std::array<CMatrix, 4> u;
  for (Index k = 0; k < 4; ++k) u[static_cast<std::size_t>(k)] = sector_unitary(k, t, frame);
  QuantumState out;
  if (initial.is_pure()) {
    CVector psi = initial.vector();
    for (Index k = 0; k < 4; ++k) {
      psi.segment(k * n_, n_) = u[static_cast<std::size_t>(k)] * psi.segment(k * n_, n_);
    }
    out = QuantumState::pure(std::move(psi), initial.layout);
  } else {
    CMatrix rho = initial.data;
    for (Index k = 0; k < 4; ++k) {
      for (Index l = k; l < 4; ++l) {
        const CMatrix blk = u[static_cast<std::size_t>(k)] * rho.block(k * n_, l * n_, n_, n_) *
                            u[static_cast<std::size_t>(l)].adjoint();
        rho.block(k * n_, l * n_, n_, n_) = blk;
        if (l != k) rho.block(l * n_, k * n_, n_, n_) = blk.adjoint();
      }
    }
    out = QuantumState::mixed(std::move(rho), initial.layout);
  }
  out.retained_weight = initial.retained_weight;
  out.truncation_leak = initial.truncation_leak || top_level_population(out) >= kLeakThreshold;
  return out;
}

QuantumState evolve_numeric(const ModelParams& params, const QuantumState& initial, double t,
                            const OracleConfig& config) {
  const Index n = config.N > 0 ? config.N : params.N;
  if (!(t >= 0.0)) throw DomainError("evolve_numeric: time must be >= 0");
  if (config.method == OracleMethod::SectorEigen) {
    return SectorOracle(params, n).evolve(initial, t, config.frame);
  }
  require_canonical(initial, n);
  const double period = 2.0 * constants::pi / params.omega_tilde;
  const double dt = config.dt > 0.0 ? config.dt / params.omega_tilde : 1e-3 * period;
  if (dt > 1e-3 * period * (1.0 + 1e-12)) {
    throw DomainError("evolve_numeric: integrator step must not exceed 1e-3 of a period");
  }
  CMatrix u = CMatrix::Zero(4 * n, 4 * n);
  for (Index k = 0; k < 4; ++k) {
    const double lambda = params.g_a * sign_a(k) + params.g_b * sign_b(k);
    const double e = params.omega_a * sign_a(k) + params.omega_b * sign_b(k);
    SectorDrive drive;
    drive.breakpoints = {0.0, t};
    drive.mu = [lambda](double, std::size_t) { return lambda; };
    drive.scalar = [e](double, std::size_t) { return e; };
    CMatrix blk = t > 0.0 ? time_ordered_propagator(params.omega_tilde, n, drive, dt, n, config.frame)
                          : CMatrix(CMatrix::Identity(n, n));
    if (config.frame == Frame::Interaction) blk *= std::exp(kI * (e * t));
    u.block(k * n, k * n, n, n) = blk;
  }
  QuantumState out;
  if (initial.is_pure()) {
    out = QuantumState::pure(u * initial.vector(), initial.layout);
  } else {
    out = QuantumState::mixed(u * initial.data * u.adjoint(), initial.layout);
  }
  out.retained_weight = initial.retained_weight;
  out.truncation_leak = initial.truncation_leak || top_level_population(out) >= kLeakThreshold;
  return out;
}

Complex expectation(const QuantumState& state, const CMatrix& op) {
  if (op.rows() != state.dim() || op.cols() != state.dim()) {
    throw DomainError("expectation: operator dimension mismatch");
  }
  if (state.is_pure()) {
    const CVector psi = state.vector();
    return psi.dot(op * psi);
  }
  return (state.data * op).trace();
}

Complex expectation(const QuantumState& state, const OperatorMatrix& op) {
  if (!(op.layout == state.layout)) throw DomainError("expectation: layout mismatch");
  return expectation(state, op.data);
}

CMatrix time_ordered_propagator(double omega_tilde, Index n_levels, const SectorDrive& drive,
                                double max_step, Index columns, Frame frame) {
  const auto& bp = drive.breakpoints;
  if (bp.size() < 2 || bp.front() != 0.0) throw DomainError("propagator: breakpoints must start at 0");
  if (!(max_step > 0.0)) throw DomainError("propagator: step must be positive");
  if (columns < 1 || columns > n_levels) throw DomainError("propagator: invalid column count");
  CMatrix psi = CMatrix::Identity(n_levels, columns);
  CMatrix k1(n_levels, columns), k2(n_levels, columns), k3(n_levels, columns),
      k4(n_levels, columns), tmp(n_levels, columns);

  // d psi/dt = -i [mu(t) (a e^{-iwt} + a^dag e^{iwt}) + e(t)] psi
  const auto rhs = [&](double t, std::size_t piece, const CMatrix& x, CMatrix& y) {
    apply_coupling(x, std::exp(-kI * (omega_tilde * t)), y);
    y = -kI * (drive.mu(t, piece) * y + drive.scalar(t, piece) * x);
  };

  for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
    const double t0 = bp[p];
    const double t1 = bp[p + 1];
    if (!(t1 >= t0)) throw DomainError("propagator: breakpoints must be ascending");
    if (t1 == t0) continue;
    const auto steps = static_cast<long>(std::ceil((t1 - t0) / max_step - 1e-9));
    const double h = (t1 - t0) / double(steps);
    for (long s = 0; s < steps; ++s) {
      const double t = t0 + h * double(s);
      rhs(t, p, psi, k1);
      tmp = psi + 0.5 * h * k1;
      rhs(t + 0.5 * h, p, tmp, k2);
      tmp = psi + 0.5 * h * k2;
      rhs(t + 0.5 * h, p, tmp, k3);
      tmp = psi + h * k3;
      rhs(s + 1 == steps ? t1 : t + h, p, tmp, k4);
      psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  if (frame == Frame::Lab) {
    const double t_end = bp.back();
    for (Index i = 0; i < n_levels; ++i) psi.row(i) *= std::exp(-kI * (omega_tilde * double(i) * t_end));
  }
  return psi;
}

}  // namespace gm

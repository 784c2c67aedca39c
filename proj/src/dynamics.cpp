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

#include "gravmediate/dynamics.hpp"

#include <cmath>

#include "gravmediate/constants.hpp"

namespace gm {

namespace {

// U_s = scalar_s * Lphase V diag(exp(-i r_s x)) V^T Rphase^dag with
// Lphase = diag(exp(i psi_left n)), Rphase = diag(exp(i psi_right n)).
struct ClosedForm {
  const DisplacementBasis* basis = nullptr;
  double psi_left = 0.0;
  double psi_right = 0.0;
  std::array<double, 4> r{};
  std::array<Complex, 4> scalar{};
};

double sector_lambda(const ModelParams& p, Index k) {
  return p.g_a * sector_sign(k / 2) + p.g_b * sector_sign(k % 2);
}

double sector_energy(const ModelParams& p, Index k) {
  return p.omega_a * sector_sign(k / 2) + p.omega_b * sector_sign(k % 2);
}

ClosedForm closed_form(const ModelParams& p, Index n_levels, double t, Frame frame) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("dynamics: time must be finite and >= 0");
  p.validate();
  ClosedForm cf;
  cf.basis = &displacement_basis(n_levels);
  const Complex a = alpha_t(p.omega_tilde, t);
  const double m = std::abs(a);
  // All branches are displaced along the common direction -conj(a).
  const double psi = m > 0.0 ? std::arg(-std::conj(a)) + 0.5 * constants::pi : 0.0;
  const double i0 = magnus_phase_integral(p.omega_tilde, t);
  cf.psi_left = psi;
  cf.psi_right = psi;
  if (frame == Frame::Lab) cf.psi_left -= p.omega_tilde * t;
  for (Index k = 0; k < 4; ++k) {
    const double lambda = sector_lambda(p, k);
    cf.r[k] = std::sqrt(2.0) * lambda * m;
    double phase = lambda * lambda * i0;
    if (frame == Frame::Lab) phase -= sector_energy(p, k) * t;
    cf.scalar[k] = std::exp(kI * phase);
  }
  return cf;
}

CMatrix real_times(const RMatrix& a, const CMatrix& b) {
  const RMatrix re = a * b.real();
  const RMatrix im = a * b.imag();
  CMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

CMatrix times_real(const CMatrix& b, const RMatrix& a) {
  const RMatrix re = b.real() * a;
  const RMatrix im = b.imag() * a;
  CMatrix out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

void apply_phases(CMatrix& m, double psi_row, double psi_col) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      m(i, j) *= std::exp(kI * (psi_row * double(i) - psi_col * double(j)));
    }
  }
}

// V^T Rphase^dag rho Rphase V.
CMatrix to_eigenbasis(const ClosedForm& cf, CMatrix rho) {
  apply_phases(rho, -cf.psi_right, -cf.psi_right);
  const RMatrix& v = cf.basis->vectors();
  return times_real(real_times(v.transpose(), rho), v);
}

// Lphase V inner V^T Lphase^dag.
CMatrix from_eigenbasis(const ClosedForm& cf, const CMatrix& inner) {
  const RMatrix& v = cf.basis->vectors();
  CMatrix out = times_real(real_times(v, inner), v.transpose());
  apply_phases(out, cf.psi_left, cf.psi_left);
  return out;
}

CVector stretch_phases(const ClosedForm& cf, Index k) {
  const RVector& x = cf.basis->nodes();
  CVector e(x.size());
  for (Index i = 0; i < x.size(); ++i) e(i) = std::exp(-kI * (cf.r[k] * x(i)));
  return e;
}

void check_layout(const ModelParams& params, const QuantumState& s) {
  if (!(s.layout == Layout::canonical(params.N))) {
    throw DomainError("dynamics: state must live on the canonical A, B, C layout with N = " +
                      std::to_string(params.N));
  }
}

CVector evolve_vector(const ClosedForm& cf, const CVector& psi, Index n) {
  const RMatrix& v = cf.basis->vectors();
  CVector out(psi.size());
  for (Index k = 0; k < 4; ++k) {
    CVector block = psi.segment(k * n, n);
    for (Index i = 0; i < n; ++i) block(i) *= std::exp(-kI * (cf.psi_right * double(i)));
    CVector y(n);
    y.real() = v.transpose() * block.real();
    y.imag() = v.transpose() * block.imag();
    y = y.cwiseProduct(stretch_phases(cf, k));
    CVector z(n);
    z.real() = v * y.real();
    z.imag() = v * y.imag();
    for (Index i = 0; i < n; ++i) z(i) *= cf.scalar[k] * std::exp(kI * (cf.psi_left * double(i)));
    out.segment(k * n, n) = z;
  }
  return out;
}

// Blocks of rho in the eigenbasis; shares one transform when rho is a product
// of a qubit state and an oscillator state.
struct EigenBlocks {
  std::array<std::array<CMatrix, 4>, 4> m;
};

EigenBlocks eigen_blocks(const ClosedForm& cf, const CMatrix& rho, Index n, bool need_lower) {
  EigenBlocks out;
  Index ref_k = 0;
  Index ref_l = 0;
  double best = -1.0;
  for (Index k = 0; k < 4; ++k) {
    for (Index l = 0; l < 4; ++l) {
      const double nrm = rho.block(k * n, l * n, n, n).norm();
      if (nrm > best) {
        best = nrm;
        ref_k = k;
        ref_l = l;
      }
    }
  }
  const CMatrix ref = rho.block(ref_k * n, ref_l * n, n, n);
  const double ref_norm2 = ref.squaredNorm();
  bool product = ref_norm2 > 0.0;
  std::array<std::array<Complex, 4>, 4> coeff{};
  for (Index k = 0; k < 4 && product; ++k) {
    for (Index l = 0; l < 4; ++l) {
      const CMatrix blk = rho.block(k * n, l * n, n, n);
      coeff[k][l] = (ref.adjoint() * blk).trace() / ref_norm2;
      if ((blk - coeff[k][l] * ref).norm() > 1e-14 * std::sqrt(ref_norm2)) {
        product = false;
        break;
      }
    }
  }
  if (product) {
    const CMatrix mref = to_eigenbasis(cf, ref);
    for (Index k = 0; k < 4; ++k) {
      for (Index l = 0; l < 4; ++l) out.m[k][l] = coeff[k][l] * mref;
    }
    return out;
  }
  for (Index k = 0; k < 4; ++k) {
    for (Index l = need_lower ? 0 : k; l < 4; ++l) {
      out.m[k][l] = to_eigenbasis(cf, rho.block(k * n, l * n, n, n));
    }
  }
  return out;
}

// Population of the top two levels after evolution, summed over sectors.
double evolved_top_population(const ClosedForm& cf, const EigenBlocks& eb, Index n) {
  const RMatrix& v = cf.basis->vectors();
  double pop = 0.0;
  for (Index k = 0; k < 4; ++k) {
    const CVector e = stretch_phases(cf, k);
    const CMatrix inner = e.asDiagonal() * eb.m[k][k] * e.conjugate().asDiagonal();
    for (Index i = std::max<Index>(0, n - 2); i < n; ++i) {
      const RVector row = v.row(i).transpose();
      pop += (row.transpose().cast<Complex>() * inner * row.cast<Complex>()).value().real();
    }
  }
  return pop;
}

}  // namespace

Complex alpha_t(double omega_tilde, double t) {
  return (std::exp(-kI * (omega_tilde * t)) - 1.0) / omega_tilde;
}

double magnus_phase_integral(double omega_tilde, double t) {
  const double wt = omega_tilde * t;
  // Series near zero avoids cancellation in wt - sin(wt).
  if (std::abs(wt) < 1e-3) {
    const double w2 = wt * wt;
    return t * t * t * omega_tilde / 6.0 * (1.0 - w2 / 20.0 + w2 * w2 / 840.0);
  }
  return (t - std::sin(wt) / omega_tilde) / omega_tilde;
}

std::array<BranchAmplitude, 4> branch_trajectories(const ModelParams& params, double t) {
  if (!(t >= 0.0)) throw DomainError("branch_trajectories: time must be >= 0");
  const Complex a = alpha_t(params.omega_tilde, t);
  const double i0 = magnus_phase_integral(params.omega_tilde, t);
  std::array<BranchAmplitude, 4> out;
  for (Index k = 0; k < 4; ++k) {
    const double lambda = sector_lambda(params, k);
    out[k].s_a = sector_sign(k / 2);
    out[k].s_b = sector_sign(k % 2);
    out[k].alpha = -lambda * std::conj(a);
    out[k].phase = lambda * lambda * i0;
  }
  return out;
}

OperatorMatrix closed_form_unitary(const ModelParams& params, double t, Frame frame) {
  const Index n = params.N;
  const ClosedForm cf = closed_form(params, n, t, frame);
  const RMatrix& v = cf.basis->vectors();
  const RVector& x = cf.basis->nodes();
  CMatrix u = CMatrix::Zero(4 * n, 4 * n);
  for (Index k = 0; k < 4; ++k) {
    RVector c(n);
    RVector s(n);
    for (Index i = 0; i < n; ++i) {
      c(i) = std::cos(cf.r[k] * x(i));
      s(i) = -std::sin(cf.r[k] * x(i));
    }
    CMatrix blk(n, n);
    blk.real() = v * c.asDiagonal() * v.transpose();
    blk.imag() = v * s.asDiagonal() * v.transpose();
    apply_phases(blk, cf.psi_left, cf.psi_right);
    u.block(k * n, k * n, n, n) = cf.scalar[k] * blk;
  }
  return {std::move(u), Layout::canonical(n)};
}

QuantumState default_initial_state(const ModelParams& params) {
  params.validate();
  const QuantumState th = thermal_state(params.nbar0, params.N);
  QuantumState s = kron(qubit_plus(Subsystem::A).as_density(),
                        qubit_plus(Subsystem::B).as_density(), th);
  s.truncation_leak = th.truncation_leak;
  s.retained_weight = th.retained_weight;
  return s;
}

QuantumState evolve(const ModelParams& params, const QuantumState& initial, double t,
                    Frame frame) {
  return evolve_reduced(params, initial, t, FactorSet{Subsystem::A, Subsystem::B, Subsystem::C},
                        frame);
}

QuantumState evolve_reduced(const ModelParams& params, const QuantumState& initial, double t,
                            FactorSet keep, Frame frame) {
  check_layout(params, initial);
  if (keep.empty()) throw DomainError("evolve_reduced: nothing to keep");
  const Index n = params.N;
  const ClosedForm cf = closed_form(params, n, t, frame);
  const Layout full = Layout::canonical(n);

  if (initial.is_pure()) {
    QuantumState out = QuantumState::pure(evolve_vector(cf, initial.vector(), n), full);
    out.truncation_leak = initial.truncation_leak || top_level_population(out) >= kLeakThreshold;
    out.retained_weight = initial.retained_weight;
    if (keep == full.members()) return out;
    QuantumState red = partial_trace(out, keep);
    red.truncation_leak = out.truncation_leak;
    red.retained_weight = out.retained_weight;
    return red;
  }

  const bool keep_a = keep.contains(Subsystem::A);
  const bool keep_b = keep.contains(Subsystem::B);
  const bool keep_c = keep.contains(Subsystem::C);
  const Index nb = keep_b ? 2 : 1;
  const Index dq = (keep_a ? 2 : 1) * nb;
  const Index dc = keep_c ? n : 1;

  const EigenBlocks eb = eigen_blocks(cf, initial.data, n, false);
  std::array<CVector, 4> e;
  for (Index k = 0; k < 4; ++k) e[k] = stretch_phases(cf, k);

  CMatrix out = CMatrix::Zero(dq * dc, dq * dc);
  for (Index k = 0; k < 4; ++k) {
    for (Index l = k; l < 4; ++l) {
      const Index ka = k / 2, kb = k % 2, la = l / 2, lb = l % 2;
      if (!keep_a && ka != la) continue;
      if (!keep_b && kb != lb) continue;
      const Index qk = (keep_a ? ka : 0) * nb + (keep_b ? kb : 0);
      const Index ql = (keep_a ? la : 0) * nb + (keep_b ? lb : 0);
      const Complex sc = cf.scalar[k] * std::conj(cf.scalar[l]);
      const CMatrix& m = eb.m[k][l];
      if (!keep_c) {
        Complex tr = 0.0;
        for (Index i = 0; i < n; ++i) tr += m(i, i) * e[k](i) * std::conj(e[l](i));
        out(qk, ql) += sc * tr;
        if (k != l) out(ql, qk) += std::conj(sc * tr);
        continue;
      }
      const CMatrix inner = e[k].asDiagonal() * m * e[l].conjugate().asDiagonal();
      const CMatrix blk = sc * from_eigenbasis(cf, inner);
      out.block(qk * n, ql * n, n, n) += blk;
      if (k != l) out.block(ql * n, qk * n, n, n) += blk.adjoint();
    }
  }
  QuantumState res = QuantumState::mixed(std::move(out), full.restricted(keep));
  res.truncation_leak =
      initial.truncation_leak || evolved_top_population(cf, eb, n) >= kLeakThreshold;
  res.retained_weight = initial.retained_weight;
  return res;
}

double mean_phonon(const ModelParams& params, double t) {
  const double s = std::sin(0.5 * params.omega_tilde * t);
  return params.nbar0 +
         4.0 * (params.g_a * params.g_a + params.g_b * params.g_b) /
             (params.omega_tilde * params.omega_tilde) * s * s;
}

std::vector<double> decoupling_times(const ModelParams& params, int n_max) {
  if (n_max < 1) throw DomainError("decoupling_times: n_max must be >= 1");
  if (!(params.omega_tilde > 0.0)) throw DomainError("decoupling_times: omega_tilde must be > 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int i = 1; i <= n_max; ++i) out.push_back(2.0 * constants::pi * i / params.omega_tilde);
  return out;
}

}  // namespace gm

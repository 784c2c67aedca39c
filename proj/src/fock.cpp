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

#include "gravmediate/fock.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "gravmediate/constants.hpp"
#include "gravmediate/eigensolver.hpp"

namespace gm {

std::string to_string(Subsystem s) {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    case Subsystem::C: return "C";
  }
  return "?";
}

std::string FactorSet::to_string() const {
  std::string out;
  for (Subsystem s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
    if (contains(s)) out += gm::to_string(s);
  }
  return out.empty() ? "{}" : out;
}

// ---- Layout ------------------------------------------------------------------

Layout::Layout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dim < 1) throw DomainError("layout: factor dimension must be positive");
    if (i > 0 && static_cast<int>(factors_[i - 1].id) >= static_cast<int>(factors_[i].id)) {
      throw DomainError("layout: factors must be distinct and in canonical A, B, C order");
    }
  }
}

Layout Layout::canonical(Index oscillator_dim) {
  return Layout({{Subsystem::A, 2}, {Subsystem::B, 2}, {Subsystem::C, oscillator_dim}});
}

Layout Layout::single(Subsystem s, Index dim) { return Layout({{s, dim}}); }

Index Layout::dim() const {
  Index d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

FactorSet Layout::members() const {
  FactorSet out;
  for (const auto& f : factors_) out = out | FactorSet{f.id};
  return out;
}

bool Layout::has(Subsystem s) const { return members().contains(s); }

Index Layout::dim_of(Subsystem s) const {
  for (const auto& f : factors_) {
    if (f.id == s) return f.dim;
  }
  throw DomainError("layout: subsystem " + to_string(s) + " not present");
}

Index Layout::stride_of(Subsystem s) const {
  Index stride = 1;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (it->id == s) return stride;
    stride *= it->dim;
  }
  throw DomainError("layout: subsystem " + to_string(s) + " not present");
}

Layout Layout::restricted(FactorSet keep) const {
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    if (keep.contains(f.id)) kept.push_back(f);
  }
  return Layout(std::move(kept));
}

Layout Layout::concat(const Layout& right) const {
  std::vector<Factor> all = factors_;
  all.insert(all.end(), right.factors_.begin(), right.factors_.end());
  return Layout(std::move(all));
}

// ---- QuantumState ------------------------------------------------------------

QuantumState QuantumState::pure(CVector psi, Layout layout) {
  QuantumState s;
  s.data = std::move(psi);
  s.layout = std::move(layout);
  s.kind = StateKind::Pure;
  if (s.data.rows() != s.layout.dim()) throw DomainError("state: dimension does not match layout");
  return s;
}

QuantumState QuantumState::mixed(CMatrix rho, Layout layout) {
  QuantumState s;
  s.data = std::move(rho);
  s.layout = std::move(layout);
  s.kind = StateKind::Density;
  if (s.data.rows() != s.layout.dim() || s.data.cols() != s.layout.dim()) {
    throw DomainError("state: dimension does not match layout");
  }
  return s;
}

CVector QuantumState::vector() const {
  if (!is_pure()) throw DomainError("state: not a pure state");
  return data.col(0);
}

CMatrix QuantumState::density() const {
  if (is_pure()) return data.col(0) * data.col(0).adjoint();
  return data;
}

QuantumState QuantumState::as_density() const {
  QuantumState out = *this;
  if (is_pure()) {
    out.data = density();
    out.kind = StateKind::Density;
  }
  return out;
}

void validate_state(const QuantumState& state) {
  const Index d = state.layout.dim();
  if (state.is_pure()) {
    if (state.data.rows() != d || state.data.cols() != 1) {
      throw DomainError("state: pure vector has wrong shape");
    }
    if (std::abs(state.data.norm() - 1.0) > 1e-12) throw DomainError("state: vector not normalized");
    return;
  }
  if (state.data.rows() != d || state.data.cols() != d) {
    throw DomainError("state: density matrix has wrong shape");
  }
  if ((state.data - state.data.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("state: density matrix not Hermitian");
  }
  if (std::abs(state.data.trace().real() - 1.0) > 1e-10) {
    throw DomainError("state: density matrix trace differs from one");
  }
  const RVector w = linalg::hermitian_eigenvalues(state.data);
  if (w.size() > 0 && w.minCoeff() < -1e-10) {
    throw DomainError("state: density matrix has negative eigenvalues");
  }
}

// ---- constructors ----------------------------------------------------------------

QuantumState thermal_state(double nbar0, Index n_levels) {
  if (!(nbar0 >= 0.0) || !std::isfinite(nbar0)) throw DomainError("thermal_state: nbar0 must be >= 0");
  if (n_levels < 2) throw DomainError("thermal_state: need at least two levels");
  RVector p(n_levels);
  const double ratio = nbar0 / (nbar0 + 1.0);
  double term = 1.0 / (nbar0 + 1.0);
  for (Index n = 0; n < n_levels; ++n) {
    p(n) = term;
    term *= ratio;
  }
  const double kept = p.sum();
  if (kept < 1.0 - 1e-6) {
    throw TruncationError("thermal_state: truncation keeps only " + std::to_string(kept) +
                          " of the thermal weight; increase N");
  }
  QuantumState s = QuantumState::mixed((p / kept).cast<Complex>().asDiagonal(),
                                       Layout::single(Subsystem::C, n_levels));
  s.retained_weight = kept;
  s.truncation_leak = p.tail(2).sum() / kept >= kLeakThreshold;
  return s;
}

QuantumState fock_state(Index k, Index n_levels) {
  if (k < 0 || k >= n_levels) throw DomainError("fock_state: level outside truncation");
  CVector psi = CVector::Zero(n_levels);
  psi(k) = 1.0;
  return QuantumState::pure(std::move(psi), Layout::single(Subsystem::C, n_levels));
}

QuantumState qubit_state(Subsystem s, Complex c0, Complex c1) {
  if (s == Subsystem::C) throw DomainError("qubit_state: C is the oscillator");
  CVector psi(2);
  psi << c0, c1;
  const double n = psi.norm();
  if (n == 0.0) throw DomainError("qubit_state: zero vector");
  return QuantumState::pure(psi / n, Layout::single(s, 2));
}

QuantumState qubit_plus(Subsystem s) { return qubit_state(s, 1.0, 1.0); }

OperatorMatrix identity_op(Subsystem s, Index dim) {
  return {CMatrix::Identity(dim, dim), Layout::single(s, dim)};
}

OperatorMatrix pauli_z(Subsystem s) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return {m, Layout::single(s, 2)};
}

OperatorMatrix pauli_x(Subsystem s) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return {m, Layout::single(s, 2)};
}

OperatorMatrix pauli_y(Subsystem s) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return {m, Layout::single(s, 2)};
}

// ---- tensor products -----------------------------------------------------------------

namespace {

CMatrix kron_matrix(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Flat-index decomposition into the contribution of a factor subset and of
// its complement; offsets are additive.
struct SplitIndex {
  std::vector<Index> inside;
  std::vector<Index> outside;
};

SplitIndex split_index(const Layout& layout, FactorSet subset) {
  const Index d = layout.dim();
  SplitIndex out;
  out.inside.resize(static_cast<std::size_t>(d));
  out.outside.resize(static_cast<std::size_t>(d));
  const auto& factors = layout.factors();
  for (Index flat = 0; flat < d; ++flat) {
    Index rem = flat;
    Index stride = d;
    Index in = 0;
    for (const auto& f : factors) {
      stride /= f.dim;
      const Index digit = rem / stride;
      rem %= stride;
      if (subset.contains(f.id)) in += digit * stride;
    }
    out.inside[static_cast<std::size_t>(flat)] = in;
    out.outside[static_cast<std::size_t>(flat)] = flat - in;
  }
  return out;
}

// Offsets (into the full flat index) of every multi-index over `subset`,
// enumerated in row-major order over the subset's factors.
std::vector<Index> subset_offsets(const Layout& layout, FactorSet subset) {
  std::vector<Index> offsets{0};
  for (const auto& f : layout.factors()) {
    if (!subset.contains(f.id)) continue;
    const Index stride = layout.stride_of(f.id);
    std::vector<Index> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(f.dim));
    for (Index base : offsets) {
      for (Index k = 0; k < f.dim; ++k) next.push_back(base + k * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

OperatorMatrix kron(const OperatorMatrix& left, const OperatorMatrix& right) {
  return {kron_matrix(left.data, right.data), left.layout.concat(right.layout)};
}

QuantumState kron(const QuantumState& left, const QuantumState& right) {
  Layout layout = left.layout.concat(right.layout);
  QuantumState out;
  if (left.is_pure() && right.is_pure()) {
    out = QuantumState::pure(kron_matrix(left.data, right.data), std::move(layout));
  } else {
    out = QuantumState::mixed(kron_matrix(left.density(), right.density()), std::move(layout));
  }
  out.truncation_leak = left.truncation_leak || right.truncation_leak;
  out.retained_weight = left.retained_weight * right.retained_weight;
  return out;
}

OperatorMatrix embed(const OperatorMatrix& op, const Layout& layout) {
  if (op.layout.factors().size() != 1) throw DomainError("embed: operator must act on one factor");
  const Factor target = op.layout.factors().front();
  if (layout.dim_of(target.id) != target.dim) throw DomainError("embed: dimension mismatch");
  CMatrix m = CMatrix::Identity(1, 1);
  for (const auto& f : layout.factors()) {
    m = kron_matrix(m, f.id == target.id ? op.data : CMatrix::Identity(f.dim, f.dim));
  }
  return {m, layout};
}

QuantumState partial_trace(const QuantumState& state, FactorSet keep) {
  const FactorSet present = state.layout.members();
  if (keep.empty() || !present.includes(keep)) {
    throw DomainError("partial_trace: invalid factor set " + keep.to_string());
  }
  if (keep == present) return state.as_density();

  FactorSet traced;
  for (const auto& f : state.layout.factors()) {
    if (!keep.contains(f.id)) traced = traced | FactorSet{f.id};
  }
  const std::vector<Index> kept = subset_offsets(state.layout, keep);
  const std::vector<Index> gone = subset_offsets(state.layout, traced);
  const Index dk = static_cast<Index>(kept.size());
  CMatrix out = CMatrix::Zero(dk, dk);

  if (state.is_pure()) {
    // Reshape psi into (kept x traced) and form M M^dag.
    CMatrix m(dk, static_cast<Index>(gone.size()));
    for (Index i = 0; i < dk; ++i) {
      for (std::size_t t = 0; t < gone.size(); ++t) {
        m(i, static_cast<Index>(t)) = state.data(kept[static_cast<std::size_t>(i)] + gone[t], 0);
      }
    }
    out.noalias() = m * m.adjoint();
  } else {
    for (Index j = 0; j < dk; ++j) {
      for (Index i = 0; i < dk; ++i) {
        Complex acc = 0.0;
        const Index ri = kept[static_cast<std::size_t>(i)];
        const Index cj = kept[static_cast<std::size_t>(j)];
        for (Index t : gone) acc += state.data(ri + t, cj + t);
        out(i, j) = acc;
      }
    }
  }
  QuantumState reduced = QuantumState::mixed(std::move(out), state.layout.restricted(keep));
  reduced.truncation_leak = state.truncation_leak;
  return reduced;
}

OperatorMatrix partial_transpose(const OperatorMatrix& op, FactorSet transposed) {
  const SplitIndex split = split_index(op.layout, transposed);
  const Index d = op.layout.dim();
  CMatrix out(d, d);
  for (Index j = 0; j < d; ++j) {
    const Index jt = split.inside[static_cast<std::size_t>(j)];
    const Index jn = split.outside[static_cast<std::size_t>(j)];
    for (Index i = 0; i < d; ++i) {
      const Index it = split.inside[static_cast<std::size_t>(i)];
      const Index in = split.outside[static_cast<std::size_t>(i)];
      out(i, j) = op.data(jt + in, it + jn);
    }
  }
  return {out, op.layout};
}

OperatorMatrix partial_transpose(const QuantumState& state, FactorSet transposed) {
  return partial_transpose(OperatorMatrix{state.density(), state.layout}, transposed);
}

// ---- norms -------------------------------------------------------------------------

double trace_norm(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("trace_norm: matrix not square");
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-10 * scale) {
    return linalg::hermitian_eigenvalues(m).cwiseAbs().sum();
  }
  const RVector w = linalg::hermitian_eigenvalues(CMatrix(m * m.adjoint()));
  return w.cwiseMax(0.0).cwiseSqrt().sum();
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  const CMatrix g = m.cols() <= m.rows() ? CMatrix(m.adjoint() * m) : CMatrix(m * m.adjoint());
  const RVector w = linalg::hermitian_eigenvalues(g);
  return std::sqrt(std::max(0.0, w.maxCoeff()));
}

double purity(const QuantumState& state) {
  if (state.is_pure()) return std::pow(state.data.norm(), 4);
  return (state.data * state.data).trace().real();
}

double trace_distance(const QuantumState& a, const QuantumState& b) {
  if (!(a.layout == b.layout)) throw DomainError("trace_distance: layouts differ");
  return 0.5 * trace_norm(CMatrix(a.density() - b.density()));
}

namespace {

CMatrix psd_sqrt(const CMatrix& m) {
  const auto es = linalg::hermitian_eigensystem(m);
  const RVector s = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * s.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

}  // namespace

double fidelity(const QuantumState& a, const QuantumState& b) {
  if (!(a.layout == b.layout)) throw DomainError("fidelity: layouts differ");
  if (a.is_pure() && b.is_pure()) return std::norm(a.data.col(0).dot(b.data.col(0)));
  if (a.is_pure()) return (a.data.col(0).adjoint() * b.data * a.data.col(0))(0, 0).real();
  if (b.is_pure()) return (b.data.col(0).adjoint() * a.data * b.data.col(0))(0, 0).real();
  const CMatrix ra = psd_sqrt(a.data);
  const CMatrix inner = ra * b.data * ra;
  const RVector w = linalg::hermitian_eigenvalues(CMatrix(0.5 * (inner + inner.adjoint())));
  const double root = w.cwiseMax(0.0).cwiseSqrt().sum();
  return root * root;
}

double von_neumann_entropy(const QuantumState& state) {
  if (state.is_pure()) return 0.0;
  const RVector w = linalg::hermitian_eigenvalues(state.data);
  double s = 0.0;
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) > 1e-300) s -= w(i) * std::log2(w(i));
  }
  return s;
}

double top_level_population(const QuantumState& state, Index levels) {
  const Index n = state.layout.dim_of(Subsystem::C);
  const Index stride = state.layout.stride_of(Subsystem::C);
  double pop = 0.0;
  for (Index flat = 0; flat < state.dim(); ++flat) {
    const Index level = (flat / stride) % n;
    if (level < n - levels) continue;
    pop += state.is_pure() ? std::norm(state.data(flat, 0)) : state.data(flat, flat).real();
  }
  return pop;
}

// ---- displacement -------------------------------------------------------------------

DisplacementBasis::DisplacementBasis(Index n_levels) {
  const auto ops = ladder_ops<double>(n_levels);
  const RMatrix x = (ops.a + ops.a_dag) / std::sqrt(2.0);
  auto es = linalg::hermitian_eigensystem(x);
  x_ = std::move(es.values);
  v_ = std::move(es.vectors);
}

void DisplacementBasis::factor(Complex beta, double& psi, double& r) {
  r = std::sqrt(2.0) * std::abs(beta);
  psi = std::arg(beta) + 0.5 * constants::pi;
}

CMatrix DisplacementBasis::displacement(Complex beta) const {
  double psi = 0.0;
  double r = 0.0;
  factor(beta, psi, r);
  const Index n = levels();
  CVector diag(n);
  for (Index k = 0; k < n; ++k) diag(k) = std::exp(-kI * (r * x_(k)));
  CMatrix vd = v_.cast<Complex>() * diag.asDiagonal();
  CMatrix d = vd * v_.transpose().cast<Complex>();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) d(i, j) *= std::exp(kI * (psi * double(i - j)));
  }
  return d;
}

const DisplacementBasis& displacement_basis(Index n_levels) {
  static std::mutex mutex;
  static std::map<Index, std::unique_ptr<DisplacementBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n_levels];
  if (!slot) slot = std::make_unique<DisplacementBasis>(n_levels);
  return *slot;
}

CMatrix displacement(Index n_levels, Complex beta) {
  return displacement_basis(n_levels).displacement(beta);
}

}  // namespace gm

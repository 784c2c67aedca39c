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

// Truncated oscillator and qubit tensor-space algebra. States and operators
// carry a Layout naming their tensor factors; the canonical order is
// A (test-mass qubit), B (ancilla qubit), C (mediator oscillator).

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gravmediate/types.hpp"

namespace gm {

enum class Subsystem : std::uint8_t { A = 0, B = 1, C = 2 };

std::string to_string(Subsystem s);

/// Set of named subsystems.
class FactorSet {
 public:
  constexpr FactorSet() = default;
  constexpr FactorSet(std::initializer_list<Subsystem> members) {
    for (Subsystem s : members) bits_ |= bit(s);
  }

  constexpr bool contains(Subsystem s) const { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(FactorSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool includes(FactorSet o) const { return (bits_ & o.bits_) == o.bits_; }
  constexpr FactorSet operator|(FactorSet o) const { return FactorSet(bits_ | o.bits_); }
  constexpr FactorSet operator&(FactorSet o) const { return FactorSet(bits_ & o.bits_); }
  constexpr bool operator==(const FactorSet&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit FactorSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Subsystem s) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
  }
  std::uint8_t bits_ = 0;
};

struct Factor {
  Subsystem id;
  Index dim;
  bool operator==(const Factor&) const = default;
};

/// Ordered tensor factors. Factors always appear in canonical A, B, C order.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<Factor> factors);

  static Layout canonical(Index oscillator_dim);
  static Layout single(Subsystem s, Index dim);

  Index dim() const;
  const std::vector<Factor>& factors() const { return factors_; }
  FactorSet members() const;
  bool has(Subsystem s) const;
  Index dim_of(Subsystem s) const;
  /// Row-major stride of subsystem `s` in the flat index.
  Index stride_of(Subsystem s) const;
  Layout restricted(FactorSet keep) const;
  Layout concat(const Layout& right) const;

  bool operator==(const Layout&) const = default;

 private:
  std::vector<Factor> factors_;
};

enum class StateKind { Pure, Density };

/// Pure state vector (dim x 1) or density matrix (dim x dim).
struct QuantumState {
  CMatrix data;
  Layout layout;
  StateKind kind = StateKind::Density;
  /// Set when >= kLeakThreshold of the weight sits in the top two Fock levels.
  bool truncation_leak = false;
  /// Weight of the untruncated distribution kept before renormalization.
  double retained_weight = 1.0;

  static QuantumState pure(CVector psi, Layout layout);
  static QuantumState mixed(CMatrix rho, Layout layout);

  Index dim() const { return layout.dim(); }
  bool is_pure() const { return kind == StateKind::Pure; }
  CVector vector() const;
  CMatrix density() const;
  QuantumState as_density() const;
};

struct OperatorMatrix {
  CMatrix data;
  Layout layout;
};

inline constexpr double kLeakThreshold = 1e-9;

/// Throws DomainError when the state invariants are violated.
void validate_state(const QuantumState& state);

// ---- single-factor constructors ------------------------------------------

/// Thermal state of the oscillator with p_n = nbar^n / (nbar+1)^(n+1),
/// renormalized over the first `n_levels` levels.
QuantumState thermal_state(double nbar0, Index n_levels);
QuantumState fock_state(Index k, Index n_levels);
/// Qubit state c0|0> + c1|1> (normalized). Index 0 is |L> for A, |0> for B.
QuantumState qubit_state(Subsystem s, Complex c0, Complex c1);
/// (|0> + |1>)/sqrt(2) on the given qubit.
QuantumState qubit_plus(Subsystem s);

OperatorMatrix identity_op(Subsystem s, Index dim);
/// sigma_z = |0><0| - |1><1| (|L><L| - |R><R| for the test mass).
OperatorMatrix pauli_z(Subsystem s);
OperatorMatrix pauli_x(Subsystem s);
OperatorMatrix pauli_y(Subsystem s);

template <typename Scalar = double>
struct LadderOperators {
  Matrix<Scalar> a;
  Matrix<Scalar> a_dag;
  Matrix<Scalar> number;
};

/// Truncated ladder operators with a(n-1, n) = sqrt(n).
template <typename Scalar = double>
LadderOperators<Scalar> ladder_ops(Index n_levels) {
  if (n_levels < 2) throw DomainError("ladder_ops: need at least two levels");
  LadderOperators<Scalar> out;
  out.a = Matrix<Scalar>::Zero(n_levels, n_levels);
  for (Index n = 1; n < n_levels; ++n) out.a(n - 1, n) = Scalar(std::sqrt(double(n)));
  out.a_dag = out.a.adjoint();
  out.number = Matrix<Scalar>::Zero(n_levels, n_levels);
  for (Index n = 0; n < n_levels; ++n) out.number(n, n) = Scalar(double(n));
  return out;
}

// ---- tensor products and reductions -------------------------------------

OperatorMatrix kron(const OperatorMatrix& left, const OperatorMatrix& right);
QuantumState kron(const QuantumState& left, const QuantumState& right);

template <typename T, typename... Rest>
T kron(const T& first, const T& second, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return kron(first, second);
  } else {
    return kron(kron(first, second), rest...);
  }
}

/// Embeds a single-factor operator into `layout` (identity elsewhere).
OperatorMatrix embed(const OperatorMatrix& op, const Layout& layout);

QuantumState partial_trace(const QuantumState& state, FactorSet keep);

/// Transposes the indices of the factors in `transposed`; others untouched.
OperatorMatrix partial_transpose(const QuantumState& state, FactorSet transposed);
OperatorMatrix partial_transpose(const OperatorMatrix& op, FactorSet transposed);

// ---- norms and distances ---------------------------------------------------

/// Sum of singular values. Hermitian input uses |eigenvalues| directly.
double trace_norm(const CMatrix& m);
/// Largest singular value.
double operator_norm(const CMatrix& m);
double purity(const QuantumState& state);
double trace_distance(const QuantumState& a, const QuantumState& b);
/// Uhlmann fidelity (squared convention: |<psi|phi>|^2 for pure states).
double fidelity(const QuantumState& a, const QuantumState& b);
double von_neumann_entropy(const QuantumState& state);

/// Total population of the top `levels` Fock levels of the oscillator factor.
double top_level_population(const QuantumState& state, Index levels = 2);

// ---- truncated displacement --------------------------------------------------

/// exp(beta a^dag - beta^* a) on the truncated space. Exactly unitary: built
/// from the eigenbasis of the truncated quadrature (a + a^dag)/sqrt(2).
class DisplacementBasis {
 public:
  explicit DisplacementBasis(Index n_levels);

  Index levels() const { return x_.size(); }
  /// Eigenvalues of the truncated position quadrature.
  const RVector& nodes() const { return x_; }
  /// Orthogonal eigenvectors (columns) of the truncated quadrature.
  const RMatrix& vectors() const { return v_; }

  CMatrix displacement(Complex beta) const;

  /// Phase angle psi and stretch r with D(beta) = R V diag(exp(-i r x)) V^T R^dag,
  /// R = diag(exp(i psi n)).
  static void factor(Complex beta, double& psi, double& r);

 private:
  RVector x_;
  RMatrix v_;
};

/// Shared, lazily built basis for a given truncation (thread-safe).
const DisplacementBasis& displacement_basis(Index n_levels);

CMatrix displacement(Index n_levels, Complex beta);

}  // namespace gm

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

#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <random>

#include "gravmediate/eigensolver.hpp"
#include "gravmediate/fock.hpp"
#include "gravmediate/oracle.hpp"
#include "support.hpp"

using namespace gm;
using gm::test::kPi;

namespace {

Layout qubits_ab() { return Layout({{Subsystem::A, 2}, {Subsystem::B, 2}}); }

QuantumState phase_state(double omega_t) {
  return QuantumState::pure(test::phase_gate_vector(omega_t), qubits_ab());
}

}  // namespace

TEST_CASE("thermal state") {
  SUBCASE("zero temperature is the vacuum") {
    const QuantumState s = thermal_state(0.0, 8);
    CHECK(std::abs(s.data(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(s.data.trace() - 1.0) < 1e-15);
  }
  SUBCASE("geometric weights at nbar0 = 10, N = 220") {
    const QuantumState s = thermal_state(10.0, 220);
    // Geometric series partial sum, independent of the library's loop.
    const double kept = 1.0 - std::pow(10.0 / 11.0, 220);
    CHECK(s.data(0, 0).real() * kept == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(s.data(5, 5).real() / s.data(4, 4).real() == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
    double mean = 0.0;
    for (Index n = 0; n < 220; ++n) mean += double(n) * s.data(n, n).real();
    CHECK(std::abs(mean - 10.0) < 1e-4);
  }
  SUBCASE("invariants") {
    for (double nbar : {0.0, 0.5, 3.0}) CHECK_NOTHROW(validate_state(thermal_state(nbar, 80)));
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(thermal_state(-1.0, 10), DomainError);
    CHECK_THROWS_AS(thermal_state(1.0, 1), DomainError);
    CHECK_THROWS_AS(thermal_state(100.0, 10), TruncationError);
  }
}

TEST_CASE("ladder operators") {
  const auto ops = ladder_ops<double>(12);
  RVector vac = RVector::Zero(12);
  vac(0) = 1.0;
  CHECK((ops.a * vac).norm() == 0.0);
  for (Index n = 0; n < 12; ++n) {
    RVector e = RVector::Zero(12);
    e(n) = 1.0;
    CHECK(((ops.a_dag * ops.a) * e - double(n) * e).norm() < 1e-14);
  }
  const RMatrix comm = ops.a * ops.a_dag - ops.a_dag * ops.a;
  RMatrix expected = RMatrix::Identity(12, 12);
  expected(11, 11) = -11.0;  // truncation corner
  CHECK((comm - expected).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(ladder_ops<double>(1), DomainError);
}

TEST_CASE("kron and layouts") {
  const OperatorMatrix id = kron(identity_op(Subsystem::A, 2), identity_op(Subsystem::B, 2));
  CHECK((id.data - CMatrix::Identity(4, 4)).norm() == 0.0);

  const QuantumState left = qubit_state(Subsystem::A, 1.0, 0.0);
  const QuantumState s = kron(left, fock_state(0, 5));
  const OperatorMatrix z = embed(pauli_z(Subsystem::A), s.layout);
  CHECK(std::abs(expectation(s, z) - 1.0) < 1e-15);

  const QuantumState abc = kron(qubit_plus(Subsystem::A), qubit_plus(Subsystem::B), fock_state(1, 7));
  CHECK(abc.dim() == 28);
  CHECK(abc.layout == Layout::canonical(7));
}

TEST_CASE("partial trace") {
  std::mt19937_64 rng(11);
  const QuantumState ra = QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::A, 2));
  const QuantumState rb = QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::B, 2));
  const QuantumState rc = QuantumState::mixed(test::random_density(5, rng), Layout::single(Subsystem::C, 5));
  const QuantumState all = kron(ra, rb, rc);
  CHECK((partial_trace(all, {Subsystem::A}).data - ra.data).norm() < 1e-12);
  CHECK((partial_trace(all, {Subsystem::C}).data - rc.data).norm() < 1e-12);
  CHECK((partial_trace(all, {Subsystem::A, Subsystem::C}).data - kron(ra, rc).data).norm() < 1e-12);

  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const QuantumState b = QuantumState::pure(bell, qubits_ab());
  CHECK((partial_trace(b, {Subsystem::A}).data - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("partial transpose of the phase-gate state") {
  const double wt = 0.37;
  const QuantumState s = phase_state(wt);
  const CVector phi = test::phase_gate_vector(wt);
  const OperatorMatrix pt = partial_transpose(s, {Subsystem::B});
  CMatrix expected(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          expected(2 * a + b, 2 * a2 + b2) = phi(2 * a + b2) * std::conj(phi(2 * a2 + b));
  CHECK((pt.data - expected).norm() < 1e-15);
  // Entries all have modulus 1/4; off-diagonal phases are 1 or e^{+-2i wt}.
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK(std::abs(std::abs(pt.data(i, j)) - 0.25) < 1e-15);
  CHECK(std::abs(pt.data(0, 1) - 0.25 * std::exp(Complex(0, 2 * wt))) < 1e-15);
  CHECK(std::abs(pt.data(0, 3) - 0.25) < 1e-15);

  // Applying twice is the identity map.
  const OperatorMatrix back = partial_transpose(pt, {Subsystem::B});
  CHECK((back.data - s.density()).norm() < 1e-15);

  // Product states stay states.
  std::mt19937_64 rng(3);
  const QuantumState prod =
      kron(QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::A, 2)),
           QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::B, 2)));
  const RVector w = linalg::hermitian_eigenvalues(partial_transpose(prod, {Subsystem::B}).data);
  CHECK(w.minCoeff() > -1e-14);
}

TEST_CASE("trace norm and the phase-gate spectrum") {
  for (double wt : {0.0, 0.2, kPi / 4, 1.1, 2.5}) {
    const OperatorMatrix pt = partial_transpose(phase_state(wt), {Subsystem::B});
    CHECK(trace_norm(pt.data) == doctest::Approx(1.0 + std::abs(std::sin(2 * wt))).epsilon(1e-13));
    const CMatrix sq = pt.data * pt.data.adjoint();
    RVector w = linalg::hermitian_eigenvalues(sq);
    const double s2 = std::pow(std::sin(2 * wt), 2) / 4;
    std::vector<double> want = {s2, s2, std::pow(std::sin(wt), 4), std::pow(std::cos(wt), 4)};
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w(i) - want[i]) < 1e-14);
  }
  CHECK(trace_norm(CMatrix::Zero(3, 3)) == 0.0);
  std::mt19937_64 rng(5);
  CHECK(trace_norm(test::random_density(6, rng)) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermitian eigensolver") {
  RMatrix d = RMatrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const RVector w = linalg::hermitian_eigenvalues(d);
  CHECK(w(0) == 1.0);
  CHECK(w(1) == 2.0);
  CHECK(w(2) == 3.0);
  const RVector sx = linalg::hermitian_eigenvalues(pauli_x(Subsystem::A).data);
  CHECK(std::abs(sx(0) + 1.0) < 1e-15);
  CHECK(std::abs(sx(1) - 1.0) < 1e-15);

  std::mt19937_64 rng(2024);
  for (Index n : {1, 2, 5, 17, 64, 65, 130, 300}) {
    for (auto method : {linalg::EigenMethod::Jacobi, linalg::EigenMethod::HouseholderQL}) {
      if (method == linalg::EigenMethod::Jacobi && n > 130) continue;
      CAPTURE(n);
      const CMatrix m = test::random_hermitian(n, rng);
      const auto es = linalg::hermitian_eigensystem(m, method);
      // Cross-check against Eigen's own solver.
      Eigen::SelfAdjointEigenSolver<CMatrix> ref(m);
      const double scale = std::max(1.0, m.cwiseAbs().maxCoeff()) * double(n);
      CHECK((es.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-11 * scale);
      const double residual = (m * es.vectors - es.vectors * es.values.asDiagonal()).norm();
      CHECK(residual <= 1e-10 * std::max(1.0, m.norm()));
      CHECK((es.vectors.adjoint() * es.vectors - CMatrix::Identity(n, n)).norm() < 1e-10 * n);
      CHECK(std::abs(es.values.sum() - m.trace().real()) < 1e-10 * n);
      for (Index i = 1; i < n; ++i) CHECK(es.values(i) >= es.values(i - 1));
    }
  }
  SUBCASE("unitary conjugation leaves the spectrum alone") {
    const CMatrix m = test::random_hermitian(40, rng);
    const CMatrix u = test::random_unitary(40, rng);
    const RVector a = linalg::hermitian_eigenvalues(m);
    const RVector b = linalg::hermitian_eigenvalues(CMatrix(u * m * u.adjoint()));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("real symmetric input") {
    RMatrix m = RMatrix::Random(90, 90);
    m = (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> ref(m);
    CHECK((linalg::hermitian_eigenvalues(m) - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("degenerate spectrum") {
    const CMatrix u = test::random_unitary(20, rng);
    RVector lam = RVector::Constant(20, 2.0);
    lam.head(5).setConstant(-1.0);
    const CMatrix m = u * lam.cast<Complex>().asDiagonal() * u.adjoint();
    const auto es = linalg::hermitian_eigensystem(CMatrix(0.5 * (m + m.adjoint())));
    CHECK((es.values - (RVector(20) << RVector::Constant(5, -1.0), RVector::Constant(15, 2.0)).finished())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(linalg::hermitian_eigenvalues(CMatrix::Random(3, 3)), DomainError);
}

TEST_CASE("state invariants and PPT bound") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const QuantumState s = QuantumState::mixed(test::random_density(4, rng), qubits_ab());
    CHECK_NOTHROW(validate_state(s));
    CHECK(trace_norm(partial_transpose(s, {Subsystem::B}).data) >= 1.0 - 1e-12);
  }
  // Convex mixture of products: equality.
  CMatrix mix = CMatrix::Zero(4, 4);
  for (int k = 0; k < 3; ++k) {
    const QuantumState p =
        kron(QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::A, 2)),
             QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::B, 2)));
    mix += p.data / 3.0;
  }
  const QuantumState sep = QuantumState::mixed(mix, qubits_ab());
  CHECK(trace_norm(partial_transpose(sep, {Subsystem::B}).data) == doctest::Approx(1.0).epsilon(1e-12));

  QuantumState bad = QuantumState::mixed(CMatrix::Identity(4, 4), qubits_ab());
  CHECK_THROWS_AS(validate_state(bad), DomainError);
}

TEST_CASE("displacement operator") {
  const Index n = 60;
  const Complex beta(0.7, -0.4);
  const CMatrix d = displacement(n, beta);
  // Coherent state amplitudes <k|beta> from the Poisson formula.
  Complex amp = std::exp(-0.5 * std::norm(beta));
  for (Index k = 0; k < 20; ++k) {
    CHECK(std::abs(d(k, 0) - amp) < 1e-12);
    amp *= beta / std::sqrt(double(k + 1));
  }
  const CMatrix dd = displacement(n, -beta) * d;
  CHECK((dd.topLeftCorner(20, 20) - CMatrix::Identity(20, 20)).norm() < 1e-10);
}

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

#include "gravmediate/dynamics.hpp"
#include "gravmediate/oracle.hpp"
#include "support.hpp"

using namespace gm;
using gm::test::kPi;

TEST_CASE("sector hamiltonians") {
  SUBCASE("no coupling: number operator plus splittings") {
    ModelParams p = ModelParams::dimensionless(0.0, 0.0, 0.0, 8);
    p.omega_a = 0.25;
    p.omega_b = 0.5;
    const auto h = sector_hamiltonians(p, 8);
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        const RMatrix& b = h[static_cast<std::size_t>(sector_index(sa, sb))];
        RMatrix want = RMatrix::Zero(8, 8);
        for (Index n = 0; n < 8; ++n) want(n, n) = double(n) + 0.25 * sa + 0.5 * sb;
        CHECK((b - want).norm() == 0.0);
      }
    }
  }
  SUBCASE("linear coefficient of the (+,-) block") {
    const ModelParams p = test::figure_params(0.0, 8);
    const RMatrix& b = sector_hamiltonians(p, 8)[1];
    CHECK(b(0, 1) == doctest::Approx(p.g_a - p.g_b).epsilon(1e-15));
    CHECK(b(2, 3) == doctest::Approx((p.g_a - p.g_b) * std::sqrt(3.0)).epsilon(1e-15));
  }
  SUBCASE("displaced-oscillator spectrum") {
    const ModelParams p = test::figure_params(0.0, 128);
    const SectorOracle oracle(p, 128);
    const double lambda = p.g_a + p.g_b;
    const RVector& w = oracle.sector(0).values;
    for (Index k = 0; k < 10; ++k) {
      CHECK(std::abs(w(k) - (p.omega_tilde * k - lambda * lambda / p.omega_tilde)) < 1e-6);
    }
  }
}

TEST_CASE("numerical evolution") {
  SUBCASE("commuting limit is a free rotation") {
    const ModelParams p = ModelParams::dimensionless(0.0, 0.0, 0.0, 10);
    CVector psi_c = CVector::Zero(10);
    psi_c(0) = psi_c(1) = 1.0 / std::sqrt(2.0);
    const QuantumState s0 = kron(qubit_plus(Subsystem::A), qubit_plus(Subsystem::B),
                                 QuantumState::pure(psi_c, Layout::single(Subsystem::C, 10)));
    const double t = 0.9;
    const QuantumState s = evolve_numeric(p, s0, t);
    CVector rotated = psi_c;
    rotated(1) *= std::exp(Complex(0.0, -t));
    const QuantumState want = kron(qubit_plus(Subsystem::A), qubit_plus(Subsystem::B),
                                   QuantumState::pure(rotated, Layout::single(Subsystem::C, 10)));
    CHECK(fidelity(s, want) > 1.0 - 1e-14);
  }
  SUBCASE("closed form vs oracle over two periods") {
    const ModelParams p = test::figure_params(0.0);
    const QuantumState s0 = default_initial_state(p);
    OracleConfig cfg;
    cfg.frame = Frame::Interaction;
    for (int i = 0; i <= 16; ++i) {
      const double t = 4 * kPi * i / 16.0;
      CHECK(fidelity(evolve(p, s0, t), evolve_numeric(p, s0, t, cfg)) >= 1.0 - 1e-8);
    }
  }
  SUBCASE("integrator and eigendecomposition agree at t_1") {
    const ModelParams p = test::figure_params(0.0);
    const QuantumState s0 = default_initial_state(p);
    OracleConfig eig;
    OracleConfig rk;
    rk.method = OracleMethod::Integrator;
    const QuantumState a = evolve_numeric(p, s0, 2 * kPi, eig);
    const QuantumState b = evolve_numeric(p, s0, 2 * kPi, rk);
    CHECK((a.data - b.data).norm() < 1e-7);
  }
  SUBCASE("lab frame rotated into the interaction picture") {
    ModelParams p = test::figure_params(1.0);
    p.omega_a = 0.2;
    p.omega_b = -0.1;
    const QuantumState s0 = default_initial_state(p);
    OracleConfig cfg;
    cfg.frame = Frame::Interaction;
    for (double t : {0.7, 3.0}) {
      CHECK(fidelity(evolve(p, s0, t), evolve_numeric(p, s0, t, cfg)) >= 1.0 - 1e-8);
    }
  }
  SUBCASE("energy conservation") {
    const ModelParams p = test::figure_params(0.0);
    const OperatorMatrix h = hamiltonian(p, p.N);
    const SectorOracle oracle(p, p.N);
    const QuantumState s0 = default_initial_state(p);
    const double e0 = expectation(s0, h).real();
    for (double t : {0.5, 2.0, 7.0}) {
      CHECK(std::abs(expectation(oracle.evolve(s0, t, Frame::Lab), h).real() - e0) < 1e-9);
    }
  }
  SUBCASE("convergence in the truncation") {
    const ModelParams p = test::figure_params(0.0);
    ModelParams wide = p;
    wide.N = p.N + 16;
    const auto vacuum_start = [](Index n) {
      CVector c = CVector::Zero(n);
      c(0) = 1.0;
      return kron(qubit_plus(Subsystem::A), qubit_plus(Subsystem::B),
                  QuantumState::pure(c, Layout::single(Subsystem::C, n)));
    };
    const QuantumState a = evolve_numeric(p, vacuum_start(p.N), 2.2);
    const QuantumState b = evolve_numeric(wide, vacuum_start(wide.N), 2.2);
    REQUIRE(a.is_pure());
    // Embed the smaller vector into the larger basis.
    CVector up = CVector::Zero(4 * wide.N);
    for (Index k = 0; k < 4; ++k) up.segment(k * wide.N, p.N) = a.data.col(0).segment(k * p.N, p.N);
    CHECK(std::norm(up.dot(b.data.col(0))) >= 1.0 - 1e-10);
  }
}

TEST_CASE("expectation values") {
  const QuantumState th = thermal_state(10.0, 400);
  CHECK(std::abs(expectation(th, CMatrix::Identity(400, 400)) - 1.0) < 1e-12);
  const auto ops = ladder_ops<double>(400);
  CHECK(std::abs(expectation(th, CMatrix(ops.number.cast<Complex>())).real() - 10.0) < 1e-4);
}

TEST_CASE("time-ordered propagator with a constant drive") {
  const ModelParams p = test::figure_params(0.0, 30);
  const SectorOracle oracle(p, 30);
  const double lambda = p.g_a - p.g_b;
  SectorDrive drive;
  drive.breakpoints = {0.0, 1.0, 2.5};
  drive.mu = [&](double, std::size_t) { return lambda; };
  drive.scalar = [](double, std::size_t) { return 0.0; };
  const CMatrix u = time_ordered_propagator(1.0, 30, drive, 1e-3, 8, Frame::Lab);
  const CMatrix ref = oracle.sector_unitary(1, 2.5, Frame::Lab).leftCols(8);
  CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-9);
}

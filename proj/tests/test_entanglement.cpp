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

#include <random>

#include "gravmediate/constants.hpp"
#include "gravmediate/entanglement.hpp"
#include "support.hpp"

using namespace gm;
using gm::test::kPi;

namespace {

Layout qubits_ab() { return Layout({{Subsystem::A, 2}, {Subsystem::B, 2}}); }

// Local rotation U_A (x) U_B applied to a two-qubit density matrix.
QuantumState rotate_locally(const QuantumState& s, std::mt19937_64& rng) {
  const CMatrix ua = test::random_unitary(2, rng);
  const CMatrix ub = test::random_unitary(2, rng);
  CMatrix u(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) u.block(2 * i, 2 * j, 2, 2) = ua(i, j) * ub;
  return QuantumState::mixed(u * s.density() * u.adjoint(), s.layout);
}

}  // namespace

TEST_CASE("log negativity") {
  std::mt19937_64 rng(9);
  SUBCASE("products and mixtures of products vanish") {
    CMatrix mix = CMatrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
      const QuantumState p =
          kron(QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::A, 2)),
               QuantumState::mixed(test::random_density(2, rng), Layout::single(Subsystem::B, 2)));
      CHECK(std::abs(log_negativity(p, Bipartition::ab())) < 1e-13);
      mix += 0.25 * p.data;
    }
    CHECK(std::abs(log_negativity(QuantumState::mixed(mix, qubits_ab()), Bipartition::ab())) < 1e-13);
  }
  SUBCASE("Bell state") {
    CVector bell = CVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    CHECK(log_negativity(QuantumState::pure(bell, qubits_ab()), Bipartition::ab()) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("phase-gate states") {
    for (double wt : {0.1, 0.5, kPi / 4, 1.3, 2.9}) {
      const QuantumState s = two_qubit_state(wt);
      const CVector v = test::phase_gate_vector(wt);
      CHECK((v.adjoint() * s.density() * v)(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
      const double want = std::log2(1.0 + std::abs(std::sin(2 * wt)));
      CHECK(log_negativity(s, Bipartition::ab()) == doctest::Approx(want).epsilon(1e-13));
      CHECK(std::abs(log_negativity(s, Bipartition::ab()) -
                     log_negativity(s, Bipartition::ab().swapped())) < 1e-12);
      CHECK(std::abs(log_negativity(rotate_locally(s, rng), Bipartition::ab()) -
                     log_negativity(s, Bipartition::ab())) < 1e-9);
    }
  }
  SUBCASE("never negative") {
    for (int k = 0; k < 20; ++k) {
      const QuantumState s = QuantumState::mixed(test::random_density(4, rng), qubits_ab());
      CHECK(log_negativity(s, Bipartition::ab()) >= -1e-14);
    }
  }
}

TEST_CASE("mediated entanglement at decoupling times") {
  const ModelParams p = test::figure_params(0.0, 10);
  CHECK(mediated_phase(p, 1) == doctest::Approx(kPi / 6).epsilon(1e-14));
  CHECK(ln_mediated_at_tn(p, 1) == doctest::Approx(std::log2(1.5)).epsilon(1e-14));
  CHECK(ln_mediated_at_tn(p, 1) == doctest::Approx(0.584963).epsilon(1e-6));
  CHECK(ln_from_phase(kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  const ModelParams none = ModelParams::dimensionless(0.0, 1.0, 0.0, 10);
  for (int n = 1; n <= 3; ++n) CHECK(ln_mediated_at_tn(none, n) == 0.0);
  CHECK_THROWS_AS(mediated_phase(p, 0), DomainError);

  // Full evolution reproduces the closed form for every temperature.
  for (double nbar : {0.0, 1.0, 10.0}) {
    const ModelParams q = test::figure_params(nbar);
    for (int n : {1, 2}) {
      const QuantumState ab = evolve_reduced(q, default_initial_state(q), 2 * kPi * n,
                                             {Subsystem::A, Subsystem::B});
      CHECK(std::abs(log_negativity(ab, Bipartition::ab()) - ln_mediated_at_tn(q, n)) < 1e-9);
    }
  }
}

TEST_CASE("direct interaction") {
  const double m = sphere_mass(2400.0, 70e-9);
  const double D = 166e-6;
  const double d0 = 500e-9;
  const double t = 2 * kPi / 100.0;
  SUBCASE("vanishes with the splitting") {
    CHECK(std::abs(phi_direct(m, m, D, 1e-15, t)) < 1e-25);
  }
  SUBCASE("diagonal Hamiltonian reproduces the phase") {
    const RMatrix h = direct_hamiltonian(m, m, D, d0);
    const double a = h(0, 0);
    const double b = h(1, 1);
    const double c = h(2, 2);
    CHECK(a == doctest::Approx(-constants::G * m * m / D).epsilon(1e-14));
    CHECK(h(3, 3) == doctest::Approx(a).epsilon(1e-14));
    CHECK(std::abs(phi_direct(m, m, D, d0, t)) ==
          doctest::Approx(std::abs(a - 0.5 * (b + c)) * t / constants::hbar).epsilon(1e-9));
    const QuantumState s = evolve_direct(m, m, D, d0, t);
    CHECK(std::abs(log_negativity(s, Bipartition::ab()) - ln_direct(m, m, D, d0, t)) < 1e-14);
    // Larger times where the phase is not tiny.
    const double t_big = 1e4;
    const double want = std::log2(1.0 + std::abs(std::sin(phi_direct(m, m, D, d0, t_big))));
    CHECK(log_negativity(evolve_direct(m, m, D, d0, t_big), Bipartition::ab()) ==
          doctest::Approx(want).epsilon(1e-9));
  }
  SUBCASE("silica example value") {
    const double phi = phi_direct(m, m, D, d0, t);
    // G m^2 t / (hbar D) / ((D/d0)^2 - 1), evaluated by hand.
    const double want = constants::G * m * m * t / (constants::hbar * D) / ((D / d0) * (D / d0) - 1.0);
    CHECK(phi == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("time series") {
  const ModelParams p = test::figure_params(0.0);
  const auto grid = period_grid(p, 2, 64);
  REQUIRE(grid.size() == 129);
  CHECK(grid[64] == doctest::Approx(2 * kPi).epsilon(1e-15));
  const TimeSeriesResult r =
      ln_timeseries(p, grid, {Bipartition::ab(), Bipartition::ac(), Bipartition::a_bc()});
  CHECK(std::abs(r.series("AB")[64] - std::log2(1.5)) < 1e-9);
  CHECK(std::abs(r.series("AC")[64]) < 1e-9);
  CHECK(std::abs(r.series("AC")[128]) < 1e-9);
  CHECK(r.series("AC")[32] > 1e-4);
  CHECK(std::abs(r.series("A|BC")[64] - std::log2(1.5)) < 1e-9);
  CHECK_THROWS(r.series("C|AB"));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(r.n_mean[i] == doctest::Approx(mean_phonon(p, grid[i])).epsilon(1e-12));
    CHECK(r.series("AB")[i] >= -1e-12);
  }
  CHECK_FALSE(r.truncation_leak);

  SUBCASE("peaks get narrower with temperature") {
    const ModelParams hot = test::figure_params(10.0);
    const auto g = period_grid(p, 2, 512);
    const double cold_w = peak_fwhm(g, ln_timeseries(p, g, {Bipartition::ab()}).series("AB"), 2 * kPi);
    const auto gh = period_grid(hot, 2, 512);
    const TimeSeriesResult rh = ln_timeseries(hot, gh, {Bipartition::ab()});
    CHECK(std::abs(rh.series("AB")[512] - std::log2(1.5)) < 1e-9);
    const double hot_w = peak_fwhm(gh, rh.series("AB"), 2 * kPi);
    CHECK(hot_w < cold_w);
  }
}

TEST_CASE("peak width on a known profile") {
  std::vector<double> t, y;
  for (int i = 0; i <= 2000; ++i) {
    t.push_back(-1.0 + i * 1e-3);
    y.push_back(std::exp(-t.back() * t.back() / (2 * 0.01)));
  }
  const double fwhm = 2.0 * std::sqrt(2.0 * std::log(2.0)) * 0.1;
  CHECK(peak_fwhm(t, y, 0.02) == doctest::Approx(fwhm).epsilon(1e-5));
}

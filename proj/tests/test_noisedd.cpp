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

#include <numeric>

#include "gravmediate/dynamics.hpp"
#include "gravmediate/entanglement.hpp"
#include "gravmediate/noise.hpp"
#include "gravmediate/noisedd.hpp"
#include "noise_reference.hpp"
#include "support.hpp"

using namespace gm;
using gm::test::kPi;

namespace {

// Brute-force midpoint double sum for Im int_0^t dt1 int_0^t1 dt2 [u1 v2 + v1 u2] e^{i w (t1 - t2)}.
double brute_triangle(const std::function<double(double)>& u, const std::function<double(double)>& v,
                      double w, double t, int n) {
  const double h = t / n;
  Complex run_u = 0.0, run_v = 0.0;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t1 = (i + 0.5) * h;
    const Complex e1 = std::exp(Complex(0, w * t1));
    // Inner integrals up to t1 (half cell for the diagonal).
    const Complex inner_v = run_v + 0.5 * h * v(t1) * std::conj(e1);
    const Complex inner_u = run_u + 0.5 * h * u(t1) * std::conj(e1);
    acc += (h * (u(t1) * e1 * inner_v + v(t1) * e1 * inner_u)).imag();
    run_v += h * v(t1) * std::conj(e1);
    run_u += h * u(t1) * std::conj(e1);
  }
  return acc;
}

NoiseRealization piecewise_c(double hold, std::vector<double> values, double t_end) {
  NoiseRealization r;
  r.eta_c = NoisePath::piecewise(hold, std::move(values));
  r.t_end = t_end;
  return r;
}

}  // namespace

TEST_CASE("noise sampling") {
  NoiseSpec spec;
  spec.kind = NoiseKind::OrnsteinUhlenbeck;
  spec.sigma = 0.0;
  spec.seed = 4;
  CHECK(sample_noise(spec, 10.0).eta_c.is_zero());

  spec.sigma = 0.3;
  const NoiseRealization a = sample_noise(spec, 10.0);
  const NoiseRealization b = sample_noise(spec, 10.0);
  CHECK(a.eta_c.values() == b.eta_c.values());
  CHECK(a.eta_a.values() != a.eta_c.values());
  spec.seed = 5;
  CHECK(sample_noise(spec, 10.0).eta_c.values() != a.eta_c.values());

  SUBCASE("OU autocorrelation at one correlation time") {
    NoiseSpec ou;
    ou.kind = NoiseKind::OrnsteinUhlenbeck;
    ou.sigma = 0.7;
    ou.tau_c = 1.0;
    ou.dt = 0.05;
    double acc = 0.0;
    const int paths = 10000;
    for (int i = 0; i < paths; ++i) {
      const NoisePath path = sample_path(ou, 1.5, derive_seed(99, std::uint64_t(i)));
      acc += path(0.2) * path(1.2);
    }
    const double want = std::exp(-1.0) * ou.sigma * ou.sigma;
    CHECK(std::abs(acc / paths - want) < 0.05 * want);
  }
  SUBCASE("piecewise paths hold their value") {
    NoiseSpec pw;
    pw.kind = NoiseKind::PiecewiseConstant;
    pw.sigma = 1.0;
    pw.hold = 0.5;
    const NoisePath path = sample_path(pw, 2.0, 1);
    REQUIRE(path.values().size() == 4);
    CHECK(path(0.1) == path(0.49));
    CHECK(path(0.6) == path.values()[1]);
    std::vector<double> bp;
    path.append_breakpoints(bp, 2.0);
    CHECK(bp == std::vector<double>{0.5, 1.0, 1.5});
  }
  SUBCASE("channel selection and validation") {
    NoiseSpec only_c = spec;
    only_c.channels = {Subsystem::C};
    const NoiseRealization r = sample_noise(only_c, 3.0);
    CHECK(r.eta_a.is_zero());
    CHECK_FALSE(r.eta_c.is_zero());
    NoiseSpec bad;
    bad.sigma = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK(noise_kind_from_string("ou") == NoiseKind::OrnsteinUhlenbeck);
    CHECK(to_string(NoiseKind::PiecewiseConstant) == "piecewise");
    CHECK_THROWS_AS(noise_kind_from_string("pink"), DomainError);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("pulse sequences") {
  const double t1 = 2 * kPi;
  const quad::Options opt = default_quadrature(1.0);
  const PulseSequence none = dd_sequence(0, t1, DDStyle::PeriodLocked, 1.0);
  for (double t : {0.0, 1.0, 6.0}) CHECK(none.F(t) == 1.0);

  const PulseSequence locked = dd_sequence(4, t1, DDStyle::PeriodLocked, 1.0);
  REQUIRE(locked.flip_times.size() == 4);
  CHECK(locked.flip_times[0] == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(locked.F(0.1) == 1.0);
  CHECK(locked.F(1.0) == -1.0);
  CHECK(std::abs(pulse_filter(locked, 1.0, t1, opt)) <= 1e-12);
  CHECK(std::abs(pulse_filter(dd_sequence(8, 2 * t1, DDStyle::PeriodLocked, 1.0), 1.0, 2 * t1, opt)) <= 1e-12);

  // Three equidistant flips cancel the unit-frequency filter exactly; two do not.
  CHECK(std::abs(pulse_filter(dd_sequence(3, t1, DDStyle::Equidistant, 1.0), 1.0, t1, opt)) < 1e-12);
  const PulseSequence eq = dd_sequence(2, t1, DDStyle::Equidistant, 1.0);
  CHECK(std::abs(pulse_filter(eq, 1.0, t1, opt)) > 1e-3);

  CHECK_THROWS_AS(dd_sequence(3, t1, DDStyle::PeriodLocked, 1.0), DomainError);
  CHECK_THROWS_AS(dd_sequence(2, 1.0, DDStyle::PeriodLocked, 1.0), DomainError);
  CHECK(dd_style_from_string("period-locked") == DDStyle::PeriodLocked);
  CHECK(to_string(DDStyle::Equidistant) == "equidistant");
  CHECK(locked.min_spacing() == doctest::Approx(kPi / 2).epsilon(1e-14));
}

TEST_CASE("filter integrals") {
  const quad::Options opt = default_quadrature(1.0);
  SUBCASE("no pulses, no noise: the noiseless second-order term") {
    for (double t : {1.0, 2 * kPi, 9.0}) {
      const PulseSequence none = PulseSequence::none(t);
      const FilterIntegrals f = dd_filter_integrals(none, none, NoiseRealization{{}, {}, {}, t}, 1.0, t, opt);
      CHECK(std::abs(f.chi_a) == 0.0);
      const double want = 4.0 * (t - std::sin(t));
      CHECK(std::abs(f.xi - Complex(0.0, -want)) < 1e-8 * std::max(1.0, want));
    }
  }
  SUBCASE("pulsed xi against a brute-force double integral") {
    const double t1 = 2 * kPi;
    const PulseSequence locked = dd_sequence(4, t1, DDStyle::PeriodLocked, 1.0);
    const auto F = [&](double s) { return locked.F(s); };
    const double want = brute_triangle(F, F, 1.0, t1, 200000);
    const FilterIntegrals f =
        dd_filter_integrals(locked, locked, NoiseRealization{{}, {}, {}, t1}, 1.0, t1, opt);
    CHECK(std::abs(f.xi.imag() + 2.0 * want) < 1e-6);
    CHECK(std::abs(f.xi) > 1.0);  // the entangling signal survives the pulses
  }
  SUBCASE("chi cancels for noise constant over half periods") {
    const double t1 = 2 * kPi;
    const PulseSequence locked = dd_sequence(4, t1, DDStyle::PeriodLocked, 1.0);
    const NoiseRealization noise = piecewise_c(kPi, {0.8, -0.3}, t1);
    const FilterIntegrals f = dd_filter_integrals(locked, locked, noise, 1.0, t1, opt);
    const PulseSequence none = PulseSequence::none(t1);
    const FilterIntegrals bare = dd_filter_integrals(none, none, noise, 1.0, t1, opt);
    CHECK(std::abs(bare.chi_a) > 0.1);
    CHECK(std::abs(f.chi_a) <= 1e-10 * std::abs(bare.chi_a));
    CHECK(std::abs(f.chi_b) <= 1e-10 * std::abs(bare.chi_a));
    // Brute force cross-check of the no-pulse value.
    const auto one = [](double) { return 1.0; };
    const auto eta = [&](double s) { return noise.eta_c(s); };
    CHECK(std::abs(bare.chi_a.imag() + 2.0 * brute_triangle(one, eta, 1.0, t1, 200000)) < 1e-6);
  }
}

TEST_CASE("noisy closed form at decoupling times") {
  // 64 levels keep truncation leakage of the 8 compared columns below 1e-8.
  ModelParams p = test::figure_params(0.0, 64);
  const double t1 = 2 * kPi;
  const quad::Options opt = default_quadrature(1.0);
  SUBCASE("zero noise reduces to the noiseless unitary") {
    const NoiseRealization quiet{{}, {}, {}, t1};
    const CMatrix u = noisy_unitary_closed(p, quiet, t1, opt).data;
    const CMatrix v = closed_form_unitary(p, t1, Frame::Interaction).data;
    CHECK((u - v).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("constant noise against hand antiderivatives") {
    NoiseRealization r;
    r.t_end = 2 * t1;
    r.eta_a = NoisePath::constant(0.2);
    r.eta_b = NoisePath::constant(-0.1);
    r.eta_c = NoisePath::constant(0.3);
    const NoiseFactors f = noise_factors(p, r, 2 * t1, opt);
    const double t = 2 * t1;
    CHECK(f.eta_bar_a == doctest::Approx(0.2 * t).epsilon(1e-12));
    CHECK(std::abs(f.eta_tilde_c) < 1e-12);
    // T[1, c] = c * 2 (t - sin t) for unit frequency.
    CHECK(std::abs(f.eta_tt - 0.3 * 2.0 * t) < 1e-8 * 0.3 * 2.0 * t);
    CHECK(std::abs(f.theta_a - (0.2 * t - p.g_a * 0.3 * 2.0 * t)) < 1e-9);
    CHECK(std::abs(f.global_phase - ((p.g_a * p.g_a + p.g_b * p.g_b) * t + 0.5 * 0.09 * 2.0 * t)) < 1e-9);
    CHECK(f.zz == doctest::Approx(2.0 * p.g_a * p.g_b * t).epsilon(1e-14));
    CHECK_THROWS_AS(noise_factors(p, r, 1.0, opt), DomainError);
  }
  SUBCASE("random realization against the time-ordered reference") {
    p.omega_a = 0.05;
    NoiseSpec spec;
    spec.kind = NoiseKind::OrnsteinUhlenbeck;
    spec.sigma = 0.1;
    spec.tau_c = 3.0;
    spec.dt = 0.1;
    spec.seed = 17;
    const NoiseRealization r = sample_noise(spec, t1);
    const auto ref = test::reference_noisy_blocks(p, r, PulseSequence::none(t1),
                                                  PulseSequence::none(t1), t1, 1e-3, 8);
    CHECK(test::block_distance(ref, noisy_unitary_closed(p, r, t1, opt).data, p.N) < 1e-6);
  }
  SUBCASE("pulsed evolution at a general time against the reference") {
    NoiseSpec spec;
    spec.kind = NoiseKind::PiecewiseConstant;
    spec.sigma = 0.2;
    spec.hold = 0.7;
    spec.seed = 3;
    const double t = 5.0;
    const NoiseRealization r = sample_noise(spec, t);
    const PulseSequence fa = dd_sequence(3, t, DDStyle::Equidistant, 1.0);
    const PulseSequence fb = dd_sequence(2, t, DDStyle::Equidistant, 1.0);
    const auto ref = test::reference_noisy_blocks(p, r, fa, fb, t, 1e-3, 8);
    CHECK(test::block_distance(ref, noisy_unitary(p, r, fa, fb, t, opt).data, p.N) < 1e-6);
  }
}

TEST_CASE("dephasing Monte Carlo") {
  const ModelParams p = test::figure_params(0.0);
  const double t1 = 2 * kPi;
  const PulseSequence none = PulseSequence::none(t1);
  SUBCASE("no noise reproduces the noiseless value") {
    NoiseSpec spec;
    spec.kind = NoiseKind::OrnsteinUhlenbeck;
    spec.sigma = 0.0;
    const MonteCarloResult r = dephasing_monte_carlo(p, spec, none, none, 5, t1);
    CHECK(std::abs(r.ln - ln_mediated_at_tn(p, 1)) < 1e-9);
    CHECK(r.n_realizations == 5);
    CHECK(r.samples.size() == 5);
  }
  SUBCASE("deterministic and independent of the worker count") {
    NoiseSpec spec;
    spec.kind = NoiseKind::OrnsteinUhlenbeck;
    spec.sigma = 0.05;
    spec.tau_c = 20.0;
    spec.dt = 0.1;
    spec.seed = 8;
    MonteCarloOptions one;
    MonteCarloOptions two;
    two.jobs = 2;
    const MonteCarloResult a = dephasing_monte_carlo(p, spec, none, none, 12, t1, one);
    const MonteCarloResult b = dephasing_monte_carlo(p, spec, none, none, 12, t1, two);
    CHECK(a.ln == b.ln);
    CHECK((a.rho_ab - b.rho_ab).norm() == 0.0);
    CHECK(a.ln < ln_mediated_at_tn(p, 1));
  }
  SUBCASE("statistics do not depend on the mediator temperature") {
    NoiseSpec spec;
    spec.kind = NoiseKind::OrnsteinUhlenbeck;
    spec.sigma = 0.05;
    spec.tau_c = 20.0;
    spec.dt = 0.1;
    spec.seed = 21;
    const ModelParams hot = test::figure_params(10.0);
    const MonteCarloResult a = dephasing_monte_carlo(p, spec, none, none, 50, t1);
    const MonteCarloResult b = dephasing_monte_carlo(hot, spec, none, none, 50, t1);
    CHECK(std::abs(a.ln - b.ln) < 1e-8);
  }
  SUBCASE("slow noise: pulses keep the pulsed signal") {
    NoiseSpec spec;
    spec.kind = NoiseKind::OrnsteinUhlenbeck;
    spec.sigma = 0.05;
    spec.tau_c = 200.0;
    spec.dt = 0.05;
    spec.seed = 5;
    const PulseSequence dd = dd_sequence(4, t1, DDStyle::PeriodLocked, 1.0);
    const MonteCarloResult with = dephasing_monte_carlo(p, spec, dd, dd, 200, t1);
    const MonteCarloResult without = dephasing_monte_carlo(p, spec, none, none, 200, t1);
    // Relative to the same pulses without noise.
    CHECK(std::abs(with.ln - with.ln_noiseless) < 0.01 * with.ln_noiseless);
    CHECK(without.ln < without.ln_noiseless);
    CHECK(bootstrap_ln_difference(with, with, 50, 0.05, 1) == 0.0);
  }
}

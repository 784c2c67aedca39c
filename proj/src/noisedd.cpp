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

#include "gravmediate/noisedd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "gravmediate/constants.hpp"
#include "gravmediate/entanglement.hpp"

namespace gm {

namespace {

int sa_of(std::size_t k) { return k / 2 == 0 ? 1 : -1; }
int sb_of(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

// Breakpoints and a per-segment locator for piecewise evaluation.
struct Segments {
  std::vector<double> bp;
  double mid(std::size_t s) const { return 0.5 * (bp[s] + bp[s + 1]); }
};

Segments segments_for(const NoiseRealization& noise, const PulseSequence& Fa,
                      const PulseSequence& Fb, double t) {
  if (!(t > 0.0)) throw DomainError("noise integrals: time must be positive");
  if (t > noise.t_end * (1.0 + 1e-12)) {
    throw DomainError("noise integrals: realization does not cover the requested time");
  }
  std::vector<double> pts = noise.breakpoints();
  pts.insert(pts.end(), Fa.flip_times.begin(), Fa.flip_times.end());
  pts.insert(pts.end(), Fb.flip_times.begin(), Fb.flip_times.end());
  return {quad::merge_breakpoints(std::move(pts), t)};
}

quad::RealFn pulse_fn(const Segments& seg, const PulseSequence& F) {
  return [&seg, &F](double, std::size_t s) { return F.F(seg.mid(s)); };
}

quad::RealFn noise_fn(const Segments& seg, const NoisePath& p) {
  return [&seg, &p](double t, std::size_t s) { return p.value(t, seg.mid(s)); };
}

double real_integral(const Segments& seg, const quad::RealFn& f, const quad::Options& opt) {
  return quad::integrate(seg.bp, [&](double t, std::size_t s) { return Complex(f(t, s)); }, opt)
      .value.real();
}

Complex rotating_integral(const Segments& seg, const quad::RealFn& f, double omega,
                          const quad::Options& opt) {
  return quad::integrate(
             seg.bp, [&](double t, std::size_t s) { return f(t, s) * std::exp(-kI * (omega * t)); },
             opt)
      .value;
}

double triangle(const Segments& seg, const quad::RealFn& u, const quad::RealFn& v, double omega,
                const quad::Options& opt) {
  return quad::triangle_sine_checked(seg.bp, u, v, omega, opt).value.real();
}

void check_decoupling_time(const ModelParams& p, double t_n) {
  const double n = t_n * p.omega_tilde / (2.0 * constants::pi);
  if (!(n >= 0.5) || std::abs(n - std::round(n)) > 1e-9) {
    throw DomainError("noisy_unitary_closed: t must be a decoupling time 2 pi n / omega_tilde");
  }
}

quad::Options effective(const quad::Options& opt, double omega) {
  return opt.max_panel > 0.0 ? opt : default_quadrature(omega);
}

CMatrix pairwise_sum(const std::vector<CMatrix>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double ln_ab(const CMatrix& rho) {
  return log_negativity(
      QuantumState::mixed(rho, Layout({{Subsystem::A, 2}, {Subsystem::B, 2}})), Bipartition::ab());
}

PhaseStats stats(const std::vector<double>& x) {
  PhaseStats s;
  if (x.empty()) return s;
  for (double v : x) s.mean += v;
  s.mean /= double(x.size());
  for (double v : x) s.variance += (v - s.mean) * (v - s.mean);
  s.variance = x.size() > 1 ? s.variance / double(x.size() - 1) : 0.0;
  return s;
}

// Two-qubit block of U (|++><++| (x) rho_c) U^dag for a sector evolution.
CMatrix reduced_qubits(const SectorEvolution& ev, const CMatrix& rho_c) {
  CMatrix out(4, 4);
  const Index n = rho_c.rows();
  std::array<CMatrix, 4> d;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = k; l < 4; ++l) {
      Complex overlap = 1.0;
      if (std::abs(ev.beta[k] - ev.beta[l]) > 1e-14) {
        if (d[k].size() == 0) d[k] = displacement(n, ev.beta[k]);
        if (d[l].size() == 0) d[l] = displacement(n, ev.beta[l]);
        overlap = (d[l].adjoint() * d[k] * rho_c).trace();
      }
      const Complex v = 0.25 * std::exp(kI * (ev.phase[k] - ev.phase[l])) * overlap;
      out(Index(k), Index(l)) = v;
      out(Index(l), Index(k)) = std::conj(v);
    }
  }
  return out;
}

}  // namespace

PulseSequence PulseSequence::none(double t_end) {
  PulseSequence p;
  p.t_end = t_end;
  return p;
}

double PulseSequence::F(double t) const {
  const auto flips = std::upper_bound(flip_times.begin(), flip_times.end(), t) - flip_times.begin();
  return flips % 2 == 0 ? 1.0 : -1.0;
}

double PulseSequence::min_spacing() const {
  double gap = t_end;
  for (std::size_t i = 1; i < flip_times.size(); ++i) gap = std::min(gap, flip_times[i] - flip_times[i - 1]);
  return gap;
}

void PulseSequence::validate() const {
  if (!(t_end > 0.0)) throw DomainError("pulse sequence: t_end must be positive");
  for (std::size_t i = 0; i < flip_times.size(); ++i) {
    if (flip_times[i] < 0.0 || flip_times[i] > t_end) {
      throw DomainError("pulse sequence: flip outside [0, t_end]");
    }
    if (i > 0 && !(flip_times[i] > flip_times[i - 1])) {
      throw DomainError("pulse sequence: flip times must be strictly ascending");
    }
  }
}

std::string to_string(DDStyle style) {
  return style == DDStyle::Equidistant ? "equidistant" : "period-locked";
}

DDStyle dd_style_from_string(const std::string& name) {
  if (name == "equidistant") return DDStyle::Equidistant;
  if (name == "period-locked" || name == "locked") return DDStyle::PeriodLocked;
  throw DomainError("unknown pulse style '" + name + "'");
}

PulseSequence dd_sequence(int n_pulses, double t_end, DDStyle style, double omega_tilde) {
  if (n_pulses < 0) throw DomainError("dd_sequence: n_pulses must be >= 0");
  if (!(t_end > 0.0)) throw DomainError("dd_sequence: t_end must be positive");
  if (!(omega_tilde > 0.0)) throw DomainError("dd_sequence: omega_tilde must be positive");
  PulseSequence seq = PulseSequence::none(t_end);
  if (style == DDStyle::Equidistant) {
    for (int j = 1; j <= n_pulses; ++j) seq.flip_times.push_back(t_end * j / (n_pulses + 1));
    return seq;
  }
  const double half = constants::pi / omega_tilde;
  const double m_real = t_end / half;
  const long m = std::lround(m_real);
  if (m < 1 || std::abs(m_real - double(m)) > 1e-9 * std::max(1.0, m_real)) {
    throw DomainError("dd_sequence: period-locked needs t_end to be a whole number of half periods");
  }
  if (n_pulses % m != 0 || (n_pulses / m) % 2 != 0) {
    throw DomainError("dd_sequence: period-locked needs an even number of pulses per half period");
  }
  const long k = n_pulses / m;
  for (long i = 0; i < m; ++i) {
    for (long j = 1; j <= k; ++j) {
      seq.flip_times.push_back(half * (double(i) + (double(j) - 0.5) / double(k)));
    }
  }
  return seq;
}

quad::Options default_quadrature(double omega_tilde) {
  quad::Options o;
  o.max_panel = 2.0 * constants::pi / omega_tilde / 128.0;
  return o;
}

Complex pulse_filter(const PulseSequence& F, double omega_tilde, double t, const quad::Options& opt) {
  const NoiseRealization none{{}, {}, {}, t};
  const Segments seg = segments_for(none, F, F, t);
  return rotating_integral(seg, pulse_fn(seg, F), omega_tilde, effective(opt, omega_tilde));
}

FilterIntegrals dd_filter_integrals(const PulseSequence& Fa, const PulseSequence& Fb,
                                    const NoiseRealization& noise, double omega_tilde, double t,
                                    const quad::Options& opt_in) {
  const quad::Options opt = effective(opt_in, omega_tilde);
  const Segments seg = segments_for(noise, Fa, Fb, t);
  const auto fa = pulse_fn(seg, Fa);
  const auto fb = pulse_fn(seg, Fb);
  const auto ec = noise_fn(seg, noise.eta_c);
  FilterIntegrals out;
  const bool quiet = noise.eta_c.is_zero();
  out.chi_a = quiet ? 0.0 : -2.0 * kI * triangle(seg, fa, ec, omega_tilde, opt);
  out.chi_b = quiet ? 0.0 : -2.0 * kI * triangle(seg, fb, ec, omega_tilde, opt);
  out.xi = -2.0 * kI * triangle(seg, fa, fb, omega_tilde, opt);
  out.F_bar_a = rotating_integral(seg, fa, omega_tilde, opt);
  out.F_bar_b = rotating_integral(seg, fb, omega_tilde, opt);
  return out;
}

SectorEvolution noisy_sector_evolution(const ModelParams& p, const NoiseRealization& noise,
                                       const PulseSequence& Fa, const PulseSequence& Fb, double t,
                                       const quad::Options& opt_in) {
  p.validate();
  const double w = p.omega_tilde;
  const quad::Options opt = effective(opt_in, w);
  const Segments seg = segments_for(noise, Fa, Fb, t);
  const auto fa = pulse_fn(seg, Fa);
  const auto fb = pulse_fn(seg, Fb);
  const auto ea = noise_fn(seg, noise.eta_a);
  const auto eb = noise_fn(seg, noise.eta_b);
  const auto ec = noise_fn(seg, noise.eta_c);
  const auto product = [](const quad::RealFn& f, const quad::RealFn& g) -> quad::RealFn {
    return [f, g](double t, std::size_t s) { return f(t, s) * g(t, s); };
  };

  const bool c_zero = noise.eta_c.is_zero();
  // Single-qubit phases: -s int (omega + eta) F.
  const double za = p.omega_a * real_integral(seg, fa, opt) +
                    (noise.eta_a.is_zero() ? 0.0 : real_integral(seg, product(ea, fa), opt));
  const double zb = p.omega_b * real_integral(seg, fb, opt) +
                    (noise.eta_b.is_zero() ? 0.0 : real_integral(seg, product(eb, fb), opt));
  const Complex fbar_a = rotating_integral(seg, fa, w, opt);
  const Complex fbar_b = rotating_integral(seg, fb, w, opt);
  const Complex eta_tilde = c_zero ? Complex(0.0) : rotating_integral(seg, ec, w, opt);

  const double t_aa = triangle(seg, fa, fa, w, opt);
  const double t_bb = triangle(seg, fb, fb, w, opt);
  const double t_ab = triangle(seg, fa, fb, w, opt);
  const double t_cc = c_zero ? 0.0 : triangle(seg, ec, ec, w, opt);
  const double t_ac = c_zero ? 0.0 : triangle(seg, fa, ec, w, opt);
  const double t_bc = c_zero ? 0.0 : triangle(seg, fb, ec, w, opt);

  SectorEvolution ev;
  for (std::size_t k = 0; k < 4; ++k) {
    const double sa = sa_of(k);
    const double sb = sb_of(k);
    ev.phase[k] = -sa * za - sb * zb +
                  0.5 * (p.g_a * p.g_a * t_aa + p.g_b * p.g_b * t_bb + t_cc) +
                  sa * p.g_a * t_ac + sb * p.g_b * t_bc + sa * sb * p.g_a * p.g_b * t_ab;
    const Complex amp = p.g_a * sa * fbar_a + p.g_b * sb * fbar_b + eta_tilde;
    ev.beta[k] = -kI * std::conj(amp);
  }
  return ev;
}

OperatorMatrix sector_unitary_matrix(const SectorEvolution& ev, Index n) {
  CMatrix u = CMatrix::Zero(4 * n, 4 * n);
  for (std::size_t k = 0; k < 4; ++k) {
    u.block(Index(k) * n, Index(k) * n, n, n) = std::exp(kI * ev.phase[k]) * displacement(n, ev.beta[k]);
  }
  return {std::move(u), Layout::canonical(n)};
}

OperatorMatrix noisy_unitary(const ModelParams& params, const NoiseRealization& noise,
                             const PulseSequence& Fa, const PulseSequence& Fb, double t,
                             const quad::Options& opt) {
  return sector_unitary_matrix(noisy_sector_evolution(params, noise, Fa, Fb, t, opt), params.N);
}

NoiseFactors noise_factors(const ModelParams& p, const NoiseRealization& noise, double t_n,
                           const quad::Options& opt_in) {
  p.validate();
  check_decoupling_time(p, t_n);
  const double w = p.omega_tilde;
  const quad::Options opt = effective(opt_in, w);
  const PulseSequence none = PulseSequence::none(t_n);
  const Segments seg = segments_for(noise, none, none, t_n);
  const quad::RealFn one = [](double, std::size_t) { return 1.0; };
  NoiseFactors f;
  f.eta_bar_a = noise.eta_a.is_zero() ? 0.0 : real_integral(seg, noise_fn(seg, noise.eta_a), opt);
  f.eta_bar_b = noise.eta_b.is_zero() ? 0.0 : real_integral(seg, noise_fn(seg, noise.eta_b), opt);
  double t_cc = 0.0;
  if (!noise.eta_c.is_zero()) {
    const auto ec = noise_fn(seg, noise.eta_c);
    f.eta_tilde_c = rotating_integral(seg, ec, w, opt);
    f.eta_tt = triangle(seg, one, ec, w, opt);
    t_cc = triangle(seg, ec, ec, w, opt);
  }
  f.theta_a = p.omega_a * t_n + f.eta_bar_a - p.g_a * f.eta_tt;
  f.theta_b = p.omega_b * t_n + f.eta_bar_b - p.g_b * f.eta_tt;
  f.zz = 2.0 * p.g_a * p.g_b * t_n / w;
  f.global_phase = (p.g_a * p.g_a + p.g_b * p.g_b) * t_n / w + 0.5 * t_cc;
  return f;
}

OperatorMatrix noisy_unitary_closed(const ModelParams& params, const NoiseRealization& noise,
                                    double t_n, const quad::Options& opt) {
  const NoiseFactors f = noise_factors(params, noise, t_n, opt);
  SectorEvolution ev;
  for (std::size_t k = 0; k < 4; ++k) {
    const double sa = sa_of(k);
    const double sb = sb_of(k);
    ev.phase[k] = -sa * f.theta_a - sb * f.theta_b + sa * sb * f.zz + f.global_phase;
    ev.beta[k] = -kI * std::conj(f.eta_tilde_c);
  }
  return sector_unitary_matrix(ev, params.N);
}

MonteCarloResult dephasing_monte_carlo(const ModelParams& params, const NoiseSpec& spec,
                                       const PulseSequence& Fa, const PulseSequence& Fb,
                                       int n_realizations, double t_n,
                                       const MonteCarloOptions& opt) {
  if (n_realizations < 1) throw DomainError("dephasing_monte_carlo: need at least one realization");
  spec.validate();
  params.validate();
  const quad::Options qopt = effective(opt.quadrature, params.omega_tilde);
  const CMatrix rho_c = thermal_state(params.nbar0, params.N).data;

  const auto n = static_cast<std::size_t>(n_realizations);
  std::vector<CMatrix> samples(n);
  std::vector<double> th_a(n), th_b(n), th_ab(n);
  const auto run = [&](std::size_t i) {
    NoiseSpec s = spec;
    s.seed = derive_seed(spec.seed, i);
    const NoiseRealization noise = sample_noise(s, t_n);
    const SectorEvolution ev = noisy_sector_evolution(params, noise, Fa, Fb, t_n, qopt);
    samples[i] = reduced_qubits(ev, rho_c);
    const auto& ph = ev.phase;
    th_a[i] = 0.25 * (ph[2] - ph[0] + ph[3] - ph[1]);
    th_b[i] = 0.25 * (ph[1] - ph[0] + ph[3] - ph[2]);
    th_ab[i] = 0.25 * (ph[0] - ph[1] - ph[2] + ph[3]);
  };

  const auto jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < n; i += jobs) run(i);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  MonteCarloResult out;
  out.n_realizations = n_realizations;
  out.rho_ab = pairwise_sum(samples, 0, n) / double(n);
  out.ln = ln_ab(out.rho_ab);
  const NoiseRealization quiet{{}, {}, {}, t_n};
  out.ln_noiseless = ln_ab(reduced_qubits(noisy_sector_evolution(params, quiet, Fa, Fb, t_n, qopt), rho_c));
  out.theta_a = stats(th_a);
  out.theta_b = stats(th_b);
  out.theta_ab = stats(th_ab);
  out.samples = std::move(samples);
  return out;
}

double bootstrap_ln_difference(const MonteCarloResult& a, const MonteCarloResult& b, int n_boot,
                               double quantile, std::uint64_t seed) {
  if (a.samples.size() != b.samples.size() || a.samples.empty()) {
    throw DomainError("bootstrap: paired results must have equal, non-zero sample counts");
  }
  if (n_boot < 1 || !(quantile >= 0.0 && quantile <= 1.0)) throw DomainError("bootstrap: bad settings");
  const std::size_t n = a.samples.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<double> diffs(static_cast<std::size_t>(n_boot));
  std::vector<CMatrix> ra(n), rb(n);
  for (auto& d : diffs) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = pick(rng);
      ra[i] = a.samples[j];
      rb[i] = b.samples[j];
    }
    d = ln_ab(pairwise_sum(ra, 0, n) / double(n)) - ln_ab(pairwise_sum(rb, 0, n) / double(n));
  }
  std::sort(diffs.begin(), diffs.end());
  const auto idx = static_cast<std::size_t>(std::floor(quantile * double(n_boot - 1)));
  return diffs[idx];
}

}  // namespace gm

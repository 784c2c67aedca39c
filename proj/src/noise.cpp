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

#include "gravmediate/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace gm {

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::Zero: return "zero";
    case NoiseKind::PiecewiseConstant: return "piecewise";
    case NoiseKind::OrnsteinUhlenbeck: return "ou";
  }
  return "?";
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "zero") return NoiseKind::Zero;
  if (name == "piecewise" || name == "piecewise-constant") return NoiseKind::PiecewiseConstant;
  if (name == "ou" || name == "ornstein-uhlenbeck") return NoiseKind::OrnsteinUhlenbeck;
  throw DomainError("unknown noise kind '" + name + "'");
}

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("noise: sigma must be >= 0");
  if (kind == NoiseKind::OrnsteinUhlenbeck) {
    if (!(tau_c > 0.0)) throw DomainError("noise: tau_c must be positive");
    if (!(dt > 0.0)) throw DomainError("noise: dt must be positive");
  }
  if (kind == NoiseKind::PiecewiseConstant && !(hold > 0.0)) {
    throw DomainError("noise: hold must be positive");
  }
}

NoisePath NoisePath::zero() { return NoisePath(); }

NoisePath NoisePath::constant(double value) {
  NoisePath p;
  p.kind_ = NoiseKind::PiecewiseConstant;
  p.step_ = std::numeric_limits<double>::infinity();
  p.values_ = {value};
  return p;
}

NoisePath NoisePath::piecewise(double hold, std::vector<double> values) {
  if (!(hold > 0.0) || values.empty()) throw DomainError("noise path: invalid piecewise data");
  NoisePath p;
  p.kind_ = NoiseKind::PiecewiseConstant;
  p.step_ = hold;
  p.values_ = std::move(values);
  return p;
}

NoisePath NoisePath::linear(double step, std::vector<double> values) {
  if (!(step > 0.0) || values.size() < 2) throw DomainError("noise path: invalid sampled data");
  NoisePath p;
  p.kind_ = NoiseKind::OrnsteinUhlenbeck;
  p.step_ = step;
  p.values_ = std::move(values);
  return p;
}

bool NoisePath::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double NoisePath::value(double t, double locator) const {
  switch (kind_) {
    case NoiseKind::Zero:
      return 0.0;
    case NoiseKind::PiecewiseConstant: {
      if (std::isinf(step_)) return values_.front();
      const auto j = static_cast<std::size_t>(std::max(0.0, std::floor(locator / step_)));
      return values_[std::min(j, values_.size() - 1)];
    }
    case NoiseKind::OrnsteinUhlenbeck: {
      const double cell = std::floor(locator / step_);
      const auto k = std::min(static_cast<std::size_t>(std::max(0.0, cell)), values_.size() - 2);
      const double frac = (t - double(k) * step_) / step_;
      return values_[k] + frac * (values_[k + 1] - values_[k]);
    }
  }
  return 0.0;
}

void NoisePath::append_breakpoints(std::vector<double>& out, double t_end) const {
  if (kind_ == NoiseKind::Zero || std::isinf(step_)) return;
  for (std::size_t j = 1;; ++j) {
    const double t = double(j) * step_;
    if (t >= t_end) break;
    out.push_back(t);
  }
}

std::vector<double> NoiseRealization::breakpoints() const {
  std::vector<double> out;
  eta_a.append_breakpoints(out, t_end);
  eta_b.append_breakpoints(out, t_end);
  eta_c.append_breakpoints(out, t_end);
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0xD1B54A32D192ED03ull * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

NoisePath sample_path(const NoiseSpec& spec, double t_end, std::uint64_t seed) {
  spec.validate();
  if (!(t_end > 0.0)) throw DomainError("noise: t_end must be positive");
  if (spec.kind == NoiseKind::Zero || spec.sigma == 0.0) return NoisePath::zero();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  if (spec.kind == NoiseKind::PiecewiseConstant) {
    const auto n = static_cast<std::size_t>(std::ceil(t_end / spec.hold - 1e-12));
    std::vector<double> v(std::max<std::size_t>(n, 1));
    for (double& x : v) x = spec.sigma * normal(rng);
    return NoisePath::piecewise(spec.hold, std::move(v));
  }
  // Exact AR(1) discretisation started from the stationary law.
  const auto n = static_cast<std::size_t>(std::ceil(t_end / spec.dt - 1e-12)) + 1;
  const double decay = std::exp(-spec.dt / spec.tau_c);
  const double kick = spec.sigma * std::sqrt(1.0 - decay * decay);
  std::vector<double> v(std::max<std::size_t>(n, 2));
  v[0] = spec.sigma * normal(rng);
  for (std::size_t k = 1; k < v.size(); ++k) v[k] = decay * v[k - 1] + kick * normal(rng);
  return NoisePath::linear(spec.dt, std::move(v));
}

NoiseRealization sample_noise(const NoiseSpec& spec, double t_end) {
  NoiseRealization r;
  r.t_end = t_end;
  if (spec.channels.contains(Subsystem::A)) r.eta_a = sample_path(spec, t_end, derive_seed(spec.seed, 0));
  if (spec.channels.contains(Subsystem::B)) r.eta_b = sample_path(spec, t_end, derive_seed(spec.seed, 1));
  if (spec.channels.contains(Subsystem::C)) r.eta_c = sample_path(spec, t_end, derive_seed(spec.seed, 2));
  return r;
}

}  // namespace gm

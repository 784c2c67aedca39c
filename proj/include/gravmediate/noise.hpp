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

// Sampled stochastic paths for the gradient-noise coefficients eta_a, eta_b
// (qubit splittings) and eta_c (mediator displacement).

#include <cstdint>
#include <string>
#include <vector>

#include "gravmediate/fock.hpp"
#include "gravmediate/types.hpp"

namespace gm {

enum class NoiseKind { Zero, PiecewiseConstant, OrnsteinUhlenbeck };

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::Zero;
  double sigma = 0.0;  // standard deviation of every sampled channel
  double tau_c = 1.0;  // OU correlation time
  double hold = 1.0;   // piecewise-constant hold time; windows start at t = 0
  double dt = 1e-2;    // OU sampling step
  std::uint64_t seed = 0;
  FactorSet channels{Subsystem::A, Subsystem::B, Subsystem::C};

  void validate() const;
};

/// A single channel. OU paths are linearly interpolated between samples;
/// piecewise-constant paths hold each value over [j*hold, (j+1)*hold).
class NoisePath {
 public:
  NoisePath() = default;

  static NoisePath zero();
  static NoisePath constant(double value);
  static NoisePath piecewise(double hold, std::vector<double> values);
  static NoisePath linear(double step, std::vector<double> values);

  NoiseKind kind() const { return kind_; }
  double step() const { return step_; }
  const std::vector<double>& values() const { return values_; }
  bool is_zero() const;

  /// Value at t, with the interpolation cell chosen by `locator` (a point
  /// inside the same quadrature segment) so jumps resolve consistently.
  double value(double t, double locator) const;
  double operator()(double t) const { return value(t, t); }

  /// Points in (0, t_end) where the path is not smooth.
  void append_breakpoints(std::vector<double>& out, double t_end) const;

 private:
  NoiseKind kind_ = NoiseKind::Zero;
  double step_ = 0.0;
  std::vector<double> values_;
};

struct NoiseRealization {
  NoisePath eta_a;
  NoisePath eta_b;
  NoisePath eta_c;
  double t_end = 0.0;

  std::vector<double> breakpoints() const;
};

/// One splitmix64 step.
std::uint64_t splitmix64(std::uint64_t& state);
/// Seed of stream `index` under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Single channel path covering [0, t_end].
NoisePath sample_path(const NoiseSpec& spec, double t_end, std::uint64_t seed);

/// Independent channels with seeds derived from spec.seed; channels not in
/// spec.channels are zero.
NoiseRealization sample_noise(const NoiseSpec& spec, double t_end);

}  // namespace gm

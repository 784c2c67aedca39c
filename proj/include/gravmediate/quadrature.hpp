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

// Composite Simpson quadrature over piecewise-smooth integrands. Integrands
// receive the segment index so that values at a breakpoint are taken from
// the side being integrated.

#include <functional>
#include <vector>

#include "gravmediate/types.hpp"

namespace gm::quad {

using RealFn = std::function<double(double, std::size_t)>;
using ComplexFn = std::function<Complex(double, std::size_t)>;

struct Options {
  double rel_tol = 1e-8;
  /// Largest Simpson panel width; 0 leaves one panel per segment.
  double max_panel = 0.0;
};

struct Estimate {
  Complex value;
  double error = 0.0;  // |I_2P - I_P| / 15
  double scale = 0.0;  // magnitude the tolerance is relative to
};

/// Sorted, de-duplicated breakpoints restricted to [0, t_end], always
/// including both ends.
std::vector<double> merge_breakpoints(std::vector<double> points, double t_end);

/// Integral of f over [breakpoints.front(), breakpoints.back()] with
/// `refine` times the base panel count per segment.
Complex simpson(const std::vector<double>& breakpoints, const ComplexFn& f, const Options& opt,
                int refine = 1);

/// T[u, v] = int_0^t dt1 int_0^t1 dt2 [u(t1) v(t2) + u(t2) v(t1)] sin(w (t1 - t2)).
double triangle_sine(const std::vector<double>& breakpoints, const RealFn& u, const RealFn& v,
                     double omega, const Options& opt, int refine = 1);

/// Richardson-checked versions; throw RefinementError when the estimate
/// exceeds rel_tol * scale.
Estimate integrate(const std::vector<double>& breakpoints, const ComplexFn& f, const Options& opt);
Estimate triangle_sine_checked(const std::vector<double>& breakpoints, const RealFn& u,
                               const RealFn& v, double omega, const Options& opt);

}  // namespace gm::quad

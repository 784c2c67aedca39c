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

#include "gravmediate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gm::quad {

namespace {

int panels_for(double len, const Options& opt, int refine) {
  int p = 1;
  if (opt.max_panel > 0.0) p = std::max(1, static_cast<int>(std::ceil(len / opt.max_panel - 1e-9)));
  return p * refine;
}

void check_breakpoints(const std::vector<double>& bp) {
  if (bp.size() < 2) throw DomainError("quadrature: need at least two breakpoints");
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (!(bp[i] > bp[i - 1])) throw DomainError("quadrature: breakpoints must be strictly ascending");
  }
}

void check_estimate(const Estimate& e, const Options& opt, const char* what) {
  if (e.error > opt.rel_tol * e.scale) {
    std::ostringstream msg;
    msg << what << ": Simpson error estimate " << e.error << " exceeds " << opt.rel_tol
        << " x scale " << e.scale << "; refine the grid";
    throw RefinementError(msg.str());
  }
}

}  // namespace

std::vector<double> merge_breakpoints(std::vector<double> points, double t_end) {
  if (!(t_end > 0.0)) throw DomainError("quadrature: end time must be positive");
  points.push_back(0.0);
  points.push_back(t_end);
  std::sort(points.begin(), points.end());
  std::vector<double> out;
  const double eps = 1e-13 * t_end;
  for (double p : points) {
    if (p < 0.0 || p > t_end) continue;
    if (!out.empty() && p - out.back() <= eps) continue;
    out.push_back(p);
  }
  // Snap the last point to t_end exactly.
  if (t_end - out.back() <= eps) {
    out.back() = t_end;
  } else {
    out.push_back(t_end);
  }
  return out;
}

Complex simpson(const std::vector<double>& bp, const ComplexFn& f, const Options& opt, int refine) {
  check_breakpoints(bp);
  Complex total = 0.0;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const double a = bp[s];
    const double len = bp[s + 1] - a;
    const int p = panels_for(len, opt, refine);
    const double h = len / (2.0 * p);
    Complex acc = f(a, s) + f(bp[s + 1], s);
    for (int j = 1; j < 2 * p; ++j) acc += (j % 2 == 1 ? 4.0 : 2.0) * f(a + h * j, s);
    total += acc * (h / 3.0);
  }
  return total;
}

double triangle_sine(const std::vector<double>& bp, const RealFn& u, const RealFn& v, double omega,
                     const Options& opt, int refine) {
  check_breakpoints(bp);
  // T = Im int u(t1) e^{iwt1} V(t1) + v(t1) e^{iwt1} U(t1), with U, V the
  // running integrals of u e^{-iwt}, v e^{-iwt}.
  Complex run_u = 0.0;
  Complex run_v = 0.0;
  Complex outer = 0.0;
  std::vector<double> x;
  std::vector<Complex> gu, gv, cu, cv;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const double a = bp[s];
    const double len = bp[s + 1] - a;
    const int p = panels_for(len, opt, refine);
    const int m = 2 * p + 1;
    const double h = len / (2.0 * p);
    x.resize(m);
    gu.resize(m);
    gv.resize(m);
    cu.resize(m);
    cv.resize(m);
    for (int j = 0; j < m; ++j) {
      x[j] = j + 1 == m ? bp[s + 1] : a + h * j;
      const Complex e = std::exp(-kI * (omega * x[j]));
      gu[j] = u(x[j], s) * e;
      gv[j] = v(x[j], s) * e;
    }
    cu[0] = run_u;
    cv[0] = run_v;
    for (int k = 0; k + 2 < m; k += 2) {
      cu[k + 1] = cu[k] + h / 12.0 * (5.0 * gu[k] + 8.0 * gu[k + 1] - gu[k + 2]);
      cv[k + 1] = cv[k] + h / 12.0 * (5.0 * gv[k] + 8.0 * gv[k + 1] - gv[k + 2]);
      cu[k + 2] = cu[k] + h / 3.0 * (gu[k] + 4.0 * gu[k + 1] + gu[k + 2]);
      cv[k + 2] = cv[k] + h / 3.0 * (gv[k] + 4.0 * gv[k + 1] + gv[k + 2]);
    }
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j) {
      // u e^{iwt} = conj(gu) for real u.
      const Complex integrand = std::conj(gu[j]) * cv[j] + std::conj(gv[j]) * cu[j];
      const double w = (j == 0 || j + 1 == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      acc += w * integrand;
    }
    outer += acc * (h / 3.0);
    run_u = cu[m - 1];
    run_v = cv[m - 1];
  }
  return outer.imag();
}

Estimate integrate(const std::vector<double>& bp, const ComplexFn& f, const Options& opt) {
  const Complex coarse = simpson(bp, f, opt, 1);
  const Complex fine = simpson(bp, f, opt, 2);
  const double magnitude =
      simpson(bp, [&](double t, std::size_t s) { return Complex(std::abs(f(t, s))); }, opt, 1).real();
  Estimate e{fine, std::abs(fine - coarse) / 15.0, std::max(std::abs(fine), magnitude)};
  check_estimate(e, opt, "integral");
  return e;
}

Estimate triangle_sine_checked(const std::vector<double>& bp, const RealFn& u, const RealFn& v,
                               double omega, const Options& opt) {
  const double coarse = triangle_sine(bp, u, v, omega, opt, 1);
  const double fine = triangle_sine(bp, u, v, omega, opt, 2);
  // |T| <= 2 int|u| int|v|.
  const auto abs_int = [&](const RealFn& g) {
    return simpson(bp, [&](double t, std::size_t s) { return Complex(std::abs(g(t, s))); }, opt, 1)
        .real();
  };
  const double magnitude = 2.0 * abs_int(u) * abs_int(v);
  Estimate e{Complex(fine), std::abs(fine - coarse) / 15.0, std::max(std::abs(fine), magnitude)};
  check_estimate(e, opt, "triangle integral");
  return e;
}

}  // namespace gm::quad

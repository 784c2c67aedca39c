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

// Shared fixtures for the unit tests.

#include <cmath>
#include <random>

#include "gravmediate/constants.hpp"
#include "gravmediate/fock.hpp"
#include "gravmediate/params.hpp"

namespace gm::test {

inline constexpr double kPi = constants::pi;

// Mediator frequency 1, g_a = 1/48, g_b = 1.
inline ModelParams figure_params(double nbar0 = 0.0, Index N = 0) {
  ModelParams p = ModelParams::dimensionless(1.0 / 48.0, 1.0, nbar0, N);
  return p;
}

inline CMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return 0.5 * (m + m.adjoint());
}

inline CMatrix random_unitary(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  // Gram-Schmidt on the columns.
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
    m.col(j).normalize();
  }
  return m;
}

inline CMatrix random_density(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

// |phi> of the two-qubit phase gate applied to |++>, built by hand.
inline CVector phase_gate_vector(double omega_t) {
  CVector v(4);
  const Complex m = std::exp(Complex(0.0, -omega_t));
  const Complex p = std::exp(Complex(0.0, omega_t));
  v << m, p, p, m;
  return 0.5 * v;
}

}  // namespace gm::test

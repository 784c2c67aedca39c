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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace gm {

using Complex = std::complex<double>;
using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Matrix<Complex>;
using RMatrix = Matrix<double>;
using CVector = Vector<Complex>;
using RVector = Vector<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Invalid argument or violated precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result would silently lose weight outside the truncated Fock space.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature could not reach the requested accuracy on the given grid.
class RefinementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The linearized oscillator has a non-positive squared frequency.
class UnstableLinearization : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace gm

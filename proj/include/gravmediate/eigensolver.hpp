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

// Dense Hermitian eigensolvers: cyclic Jacobi for small matrices and
// Householder tridiagonalization followed by implicit QL for larger ones.
// Both work for real symmetric and complex Hermitian input.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>
#include <vector>

#include "gravmediate/types.hpp"

namespace gm::linalg {

/// Eigenvalues in ascending order, eigenvectors as matching columns.
template <typename Scalar>
struct EigenSystem {
  RVector values;
  Matrix<Scalar> vectors;
};

enum class EigenMethod { Automatic, Jacobi, HouseholderQL };

/// Matrices up to this dimension use Jacobi under EigenMethod::Automatic.
inline constexpr Index kJacobiMaxDim = 64;

namespace detail {

template <typename Scalar>
inline Scalar unit_phase(const Scalar& z) {
  const double r = std::abs(z);
  if (r == 0.0) return Scalar(1.0);
  return z / r;
}

template <typename Scalar>
inline Scalar conj_of(const Scalar& z) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return z;
  } else {
    return std::conj(z);
  }
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
void check_hermitian(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("hermitian eigensolver: matrix is not square");
  }
  if (m.size() == 0) return;
  if (!m.allFinite()) {
    throw DomainError("hermitian eigensolver: non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m) > 1e-10 * scale) {
    throw DomainError("hermitian eigensolver: matrix is not Hermitian");
  }
}

// Cyclic Jacobi. `a` is destroyed. Each rotation first removes the phase of
// a(p,q) and then applies the classical real rotation.
template <typename Scalar>
void jacobi(Matrix<Scalar>& a, RVector& w, Matrix<Scalar>* v) {
  const Index n = a.rows();
  if (v) v->setIdentity(n, n);
  const double total = a.norm();
  const double tol = 1e-17 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Index q = 1; q < n; ++q) {
      off += a.col(q).head(q).squaredNorm();
    }
    if (std::sqrt(2.0 * off) <= tol) break;

    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= tol * 1e-3) {
          continue;
        }
        const Scalar e = unit_phase(apq);
        const Scalar ec = conj_of(e);
        const double theta = (std::real(a(q, q)) - std::real(a(p, p))) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * ec * akq;
          a(k, q) = s * akp + c * ec * akq;
        }
        for (Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * e * aqk;
          a(q, k) = s * apk + c * e * aqk;
        }
        a(p, q) = Scalar(0.0);
        a(q, p) = Scalar(0.0);
        a(p, p) = Scalar(std::real(a(p, p)));
        a(q, q) = Scalar(std::real(a(q, q)));
        if (v) {
          auto& vm = *v;
          for (Index k = 0; k < n; ++k) {
            const Scalar vkp = vm(k, p);
            const Scalar vkq = vm(k, q);
            vm(k, p) = c * vkp - s * ec * vkq;
            vm(k, q) = s * vkp + c * ec * vkq;
          }
        }
      }
    }
  }
  w = a.diagonal().real();
}

// Reduces Hermitian `a` to real symmetric tridiagonal form T = Q^H A Q.
// On return `diag` and `off` hold T; `q` (if given) holds Q.
template <typename Scalar>
void householder_tridiagonal(Matrix<Scalar>& a, RVector& diag, RVector& off,
                             Matrix<Scalar>* q) {
  const Index n = a.rows();
  diag.resize(n);
  off.setZero(std::max<Index>(n - 1, 0));
  std::vector<Scalar> sub(static_cast<std::size_t>(std::max<Index>(n - 1, 0)));
  if (q) q->setIdentity(n, n);

  Vector<Scalar> v, p, w;
  for (Index k = 0; k + 2 < n; ++k) {
    const Index m = n - k - 1;
    auto x = a.col(k).tail(m);
    const double tail = x.tail(m - 1).squaredNorm();
    if (tail == 0.0) {
      sub[static_cast<std::size_t>(k)] = x(0);
      continue;
    }
    const double xnorm = std::sqrt(std::norm(x(0)) + tail);
    const Scalar alpha = -unit_phase(x(0)) * xnorm;
    v = x;
    v(0) -= alpha;
    v.normalize();

    auto block = a.bottomRightCorner(m, m);
    p.noalias() = block * v;
    const Scalar kappa = Scalar(std::real(v.dot(p)));
    w = p - kappa * v;
    block.noalias() -= 2.0 * (v * w.adjoint() + w * v.adjoint());
    sub[static_cast<std::size_t>(k)] = alpha;
    if (q) {
      auto cols = q->rightCols(m);
      p.noalias() = cols * v;
      cols.noalias() -= 2.0 * p * v.adjoint();
    }
  }
  if (n >= 2) sub[static_cast<std::size_t>(n - 2)] = a(n - 1, n - 2);
  for (Index i = 0; i < n; ++i) diag(i) = std::real(a(i, i));

  // Diagonal unitary that makes the off-diagonal real and non-negative.
  Scalar phase(1.0);
  for (Index k = 0; k + 1 < n; ++k) {
    const Scalar s = sub[static_cast<std::size_t>(k)];
    off(k) = std::abs(s);
    phase = phase * unit_phase(s);
    if (q) q->col(k + 1) *= phase;
  }
}

// Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal
// matrix. `z`, if given, is right-multiplied by the accumulated rotations.
template <typename Scalar>
void tridiagonal_ql(RVector& d, RVector off, Matrix<Scalar>* z) {
  const Index n = d.size();
  if (n == 0) return;
  RVector e = RVector::Zero(n);
  e.head(n - 1) = off;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Absolute floor so that couplings between (near) zero diagonal entries,
  // common for rank-deficient input, still deflate.
  const double tiny = eps * (d.cwiseAbs().maxCoeff() + 2.0 * e.cwiseAbs().maxCoeff()) +
                       std::numeric_limits<double>::min();

  for (Index l = 0; l < n; ++l) {
    int iterations = 0;
    Index m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) <= eps * dd || std::abs(e(m)) <= tiny) break;
      }
      if (m == l) break;
      if (++iterations > 200) {
        throw DomainError("tridiagonal QL: no convergence");
      }
      double g = (d(l + 1) - d(l)) / (2.0 * e(l));
      double r = std::hypot(g, 1.0);
      g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool deflated = false;
      for (Index i = m - 1; i >= l; --i) {
        const double f = s * e(i);
        const double b = c * e(i);
        r = std::hypot(f, g);
        e(i + 1) = r;
        if (r == 0.0) {
          d(i + 1) -= p;
          e(m) = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + 2.0 * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
        if (z) {
          auto zi = z->col(i);
          auto zi1 = z->col(i + 1);
          for (Index k = 0; k < z->rows(); ++k) {
            const Scalar f1 = zi1(k);
            zi1(k) = s * zi(k) + c * f1;
            zi(k) = c * zi(k) - s * f1;
          }
        }
      }
      if (deflated) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = 0.0;
    } while (m != l);
  }
}

template <typename Scalar>
void sort_ascending(RVector& w, Matrix<Scalar>* v) {
  const Index n = w.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return w(i) < w(j); });
  RVector sorted(n);
  for (Index i = 0; i < n; ++i) sorted(i) = w(order[static_cast<std::size_t>(i)]);
  w = sorted;
  if (v) {
    Matrix<Scalar> vs(v->rows(), n);
    for (Index i = 0; i < n; ++i) vs.col(i) = v->col(order[static_cast<std::size_t>(i)]);
    *v = std::move(vs);
  }
}

template <typename Scalar>
EigenSystem<Scalar> solve(Matrix<Scalar> a, bool want_vectors, EigenMethod method) {
  check_hermitian(a);
  const Index n = a.rows();
  EigenSystem<Scalar> out;
  if (n == 0) return out;
  // Symmetrize to remove roundoff-level anti-Hermitian parts.
  a = (0.5 * (a + a.adjoint())).eval();

  if (method == EigenMethod::Automatic) {
    method = n <= kJacobiMaxDim ? EigenMethod::Jacobi : EigenMethod::HouseholderQL;
  }
  Matrix<Scalar>* vec = want_vectors ? &out.vectors : nullptr;
  if (method == EigenMethod::Jacobi) {
    jacobi(a, out.values, vec);
  } else {
    RVector off;
    householder_tridiagonal(a, out.values, off, vec);
    tridiagonal_ql(out.values, off, vec);
  }
  sort_ascending(out.values, vec);
  return out;
}

}  // namespace detail

template <typename Derived>
RVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m,
                              EigenMethod method = EigenMethod::Automatic) {
  using Scalar = typename Derived::Scalar;
  return detail::solve<Scalar>(m.eval(), false, method).values;
}

template <typename Derived>
EigenSystem<typename Derived::Scalar> hermitian_eigensystem(
    const Eigen::MatrixBase<Derived>& m, EigenMethod method = EigenMethod::Automatic) {
  using Scalar = typename Derived::Scalar;
  return detail::solve<Scalar>(m.eval(), true, method);
}

}  // namespace gm::linalg

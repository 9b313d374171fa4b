/* Copyright 2026 The Hermitize Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Independent reference computations for the test suites. Nothing here
// calls into the library's numerical paths.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <vector>

#include "hermitize/types.hpp"

namespace oracle {

using hermitize::Complex;

/// Exact monomial coefficients (ascending) of U_k from U_{k+1} = 2y U_k - U_{k-1}.
inline std::vector<double> u_monomial(int k) {
  std::vector<double> prev{0.0}, cur{1.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Complex horner(const std::vector<double>& c, Complex y) {
  Complex v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * y + c[i];
  return v;
}

/// Monomial coefficients of sum_k c_k U_k.
inline std::vector<double> u_combo_monomial(const std::vector<double>& c) {
  std::vector<double> out(c.size(), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto u = u_monomial(static_cast<int>(k));
    for (std::size_t i = 0; i < u.size(); ++i) out[i] += c[k] * u[i];
  }
  return out;
}

inline Eigen::MatrixXcd to_eigen(const hermitize::ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j);
  return e;
}

/// Hermitian eigenvalues by Householder tridiagonalization + QL (Eigen).
inline std::vector<double> hermitian_eigenvalues(const hermitize::ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

/// General complex eigenvalues via Schur decomposition (Eigen).
inline std::vector<Complex> eigenvalues(const hermitize::ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
  std::vector<Complex> out(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

/// Roots of a y^2 + b y + c with real coefficients.
inline std::vector<Complex> quadratic_roots(double a, double b, double c) {
  const Complex disc = std::sqrt(Complex(b * b - 4.0 * a * c));
  return {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
}

}  // namespace oracle

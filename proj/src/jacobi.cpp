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

#include <algorithm>
#include <cmath>
#include <string>

#include "hermitize/errors.hpp"
#include "hermitize/metric.hpp"

namespace hermitize {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One rotation annihilating a(p, q). With a(p, q) = |a(p, q)| e^{i phi} the
// unitary is U = diag(1, e^{-i phi}) R(theta) on the (p, q) plane, which
// reduces the pair to the real symmetric Jacobi step.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.size();
  const Complex up_q = -s * std::conj(phase);  // U(q, p)
  const Complex uq_q = c * std::conj(phase);   // U(q, q)
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = arp * c + arq * up_q;
    a(r, q) = arp * s + arq * uq_q;
  }
  for (std::size_t col = 0; col < n; ++col) {
    const Complex apc = a(p, col);
    const Complex aqc = a(q, col);
    a(p, col) = c * apc + std::conj(up_q) * aqc;
    a(q, col) = s * apc + std::conj(uq_q) * aqc;
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input, const JacobiOptions& options) {
  ComplexMatrix a = input;
  const std::size_t n = a.size();
  const double scale = a.frobenius_norm();
  std::vector<double> eig(n);
  auto collect = [&] {
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
  };
  if (scale == 0.0) return collect();

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= options.tol * scale) return collect();
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
  }
  if (off_diagonal_norm(a) <= options.tol * scale) return collect();
  throw NoConvergence("Jacobi eigenvalue iteration exceeded " +
                      std::to_string(options.max_sweeps) + " sweeps");
}

std::vector<double> hermitian_eigenvalues(const MetricMatrix& theta, const JacobiOptions& options) {
  return hermitian_eigenvalues(theta.entries(), options);
}

}  // namespace hermitize

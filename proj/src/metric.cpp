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

#include "hermitize/metric.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hermitize/errors.hpp"

namespace hermitize {

std::string_view to_string(MetricFamily f) {
  switch (f) {
    case MetricFamily::prop2: return "prop2";
    case MetricFamily::prop3: return "prop3";
    case MetricFamily::n3_general: return "n3_general";
    case MetricFamily::n3_special: return "n3_special";
    case MetricFamily::n4_special: return "n4_special";
    case MetricFamily::nullspace_basis_element: return "nullspace_basis_element";
    case MetricFamily::recurrence: return "recurrence";
  }
  return "unknown";
}

MetricFamily metric_family_from_string(std::string_view s) {
  for (auto f : {MetricFamily::prop2, MetricFamily::prop3, MetricFamily::n3_general,
                 MetricFamily::n3_special, MetricFamily::n4_special,
                 MetricFamily::nullspace_basis_element, MetricFamily::recurrence})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown metric family '" + std::string(s) + "'");
}

MetricMatrix::MetricMatrix(int n, MetricFamily family, std::vector<double> params)
    : n_(n), family_(family), params_(std::move(params)), entries_(static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidArgument("metric dimension must be positive");
}

void MetricMatrix::set_diagonal(int i, double value) { entries_(i, i) = value; }

void MetricMatrix::set_upper(int i, int j, Complex value) {
  if (!(i < j)) throw InvalidArgument("set_upper needs i < j");
  entries_(i, j) = value;
  entries_(j, i) = std::conj(value);
}

namespace {

Complex power(Complex base, int exponent) {
  Complex result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

void require_dimension(int n) {
  if (n < 2) throw InvalidArgument("metric dimension must be at least 2");
}

// Fills a Toeplitz band: unit diagonal (or zero), entry(i, i+k) = band(k).
template <class Band>
void fill_band(MetricMatrix& m, double diagonal, Band band) {
  for (int i = 0; i < m.n(); ++i) m.set_diagonal(i, diagonal);
  for (int k = 1; k < m.n(); ++k) {
    const Complex v = band(k);
    for (int i = 0; i + k < m.n(); ++i) m.set_upper(i, i + k, v);
  }
}

}  // namespace

MetricMatrix metric_prop2(int n, double omega) {
  require_dimension(n);
  MetricMatrix m(n, MetricFamily::prop2, {omega});
  const Complex ratio{1.0, -omega};
  fill_band(m, 1.0, [&](int k) { return Complex{0.0, -omega} * power(ratio, k - 1); });
  return m;
}

MetricMatrix metric_prop3(int n, double omega, double u) {
  require_dimension(n);
  MetricMatrix m(n, MetricFamily::prop3, {omega, u});
  const Complex ratio{1.0, -omega};
  fill_band(m, 1.0, [&](int k) {
    const Complex g = power(ratio, k - 1);
    return Complex{0.0, -omega} * g + u * g;
  });
  return m;
}

MetricMatrix metric_recurrence(int n, double omega, double u) {
  require_dimension(n);
  MetricMatrix m(n, MetricFamily::recurrence, {omega, u});
  std::vector<Complex> band(static_cast<std::size_t>(n));
  double q1 = 1.0, q2 = 0.0;
  for (int k = 1; k < n; ++k) {
    // Theta_{n,n+k} = (u - i omega) q(k)
    band[k] = Complex{u * q1 + omega * q2, u * q2 - omega * q1};
    const double next1 = q1 + omega * q2;
    const double next2 = q2 - omega * q1;
    q1 = next1;
    q2 = next2;
  }
  fill_band(m, 1.0, [&](int k) { return band[k]; });
  return m;
}

MetricMatrix metric_n3_general(double xi, double r, double s, double u) {
  MetricMatrix m(3, MetricFamily::n3_general, {xi, r, s, u});
  const double x2 = xi * xi;
  const double q = 1.0 + x2;
  const double u2 = -r * xi / q;
  const double z2 = -(u * x2 + r + u) * xi / (q * q);
  const double z1 =
      (s - r + u + 2.0 * s * x2 - 3.0 * r * x2 - x2 * x2 * r + x2 * x2 * s + u * x2) / (q * q);
  m.set_diagonal(0, r);
  m.set_diagonal(1, s);
  m.set_diagonal(2, r);
  m.set_upper(0, 1, {u, u2});
  m.set_upper(1, 2, {u, u2});
  m.set_upper(0, 2, {z1, z2});
  return m;
}

MetricMatrix metric_n3_special(double xi, double u) {
  MetricMatrix m(3, MetricFamily::n3_special, {xi, u});
  const double x2 = xi * xi;
  const double q = 1.0 + x2;
  const Complex near{u, -xi / q};
  const Complex corner{(u - x2 + u * x2) / (1.0 + 2.0 * x2 + x2 * x2),
                       -(u * x2 + 1.0 + u) * xi / (q * q)};
  for (int i = 0; i < 3; ++i) m.set_diagonal(i, 1.0);
  m.set_upper(0, 1, near);
  m.set_upper(1, 2, near);
  m.set_upper(0, 2, corner);
  return m;
}

MetricMatrix metric_n4_special(double xi) {
  MetricMatrix m(4, MetricFamily::n4_special, {xi});
  const double x2 = xi * xi;
  const double q = 1.0 + x2;
  const double u2 = -xi / q;
  const double z1 = -x2 / (q * q);
  const double z2 = -xi / (q * q);
  const double r1 = -2.0 * x2 / (q * q * q);
  const double r2 = -(1.0 - x2) * xi / (q * q * q);
  fill_band(m, 1.0, [&](int k) -> Complex {
    switch (k) {
      case 1: return {0.0, u2};
      case 2: return {z1, z2};
      default: return {r1, r2};
    }
  });
  return m;
}

double dieudonne_residual(const TridiagonalHamiltonian& h, const MetricMatrix& theta) {
  if (h.n != theta.n())
    throw DimensionMismatch("Hamiltonian is " + std::to_string(h.n) + "x" + std::to_string(h.n) +
                            " but metric is " + std::to_string(theta.n()) + "x" +
                            std::to_string(theta.n()));
  // The real bulk shift cancels identically, so only the corner deviations
  // from it enter; both conventions then give the same arithmetic.
  const int n = h.n;
  std::vector<Complex> delta(n, 0.0);
  delta[0] = h.corner_first - h.bulk_diagonal;
  delta[n - 1] = h.corner_last - h.bulk_diagonal;
  const double t = h.off_diagonal;
  const ComplexMatrix& th = theta.entries();
  auto at = [&](int i, int j) { return (i < 0 || i >= n) ? Complex(0.0) : th(i, j); };
  auto at_col = [&](int i, int j) { return (j < 0 || j >= n) ? Complex(0.0) : th(i, j); };
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex left = std::conj(delta[i]) * th(i, j) + t * (at(i - 1, j) + at(i + 1, j));
      const Complex right = th(i, j) * delta[j] + t * (at_col(i, j - 1) + at_col(i, j + 1));
      sum += std::norm(left - right);
    }
  return std::sqrt(sum);
}

double frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("Frobenius product of unequal sizes");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) sum += (std::conj(a(i, j)) * b(i, j)).real();
  return sum;
}

double projection_residual(const MetricMatrix& theta, const std::vector<MetricMatrix>& basis) {
  ComplexMatrix rest = theta.entries();
  for (const auto& b : basis) {
    const double c = frobenius_inner(b.entries(), rest);
    rest = rest - c * b.entries();
  }
  return rest.frobenius_norm() / theta.entries().frobenius_norm();
}

VerificationReport verify(const TridiagonalHamiltonian& h, const MetricMatrix& theta,
                          std::optional<double> tol_pd) {
  VerificationReport report;
  report.dieudonne_residual = dieudonne_residual(h, theta);
  report.eigenvalues = hermitian_eigenvalues(theta);
  report.min_eigenvalue = report.eigenvalues.front();
  const double tol = tol_pd.value_or(1e-12 * theta.entries().frobenius_norm());
  report.positive_definite = report.min_eigenvalue > tol;
  return report;
}

}  // namespace hermitize

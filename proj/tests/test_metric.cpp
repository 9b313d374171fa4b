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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hermitize/errors.hpp"
#include "hermitize/metric.hpp"
#include "oracles.hpp"

using namespace hermitize;

namespace {

TridiagonalHamiltonian band_hamiltonian(int n, double omega,
                                        Convention c = Convention::shifted) {
  return hamiltonian_from_z(n, Complex(1.0, omega), c);
}

TridiagonalHamiltonian zeta0_hamiltonian(int n, double xi) {
  return build_hamiltonian(ModelParams::from_xi_zeta(n, xi, 0.0, Convention::shifted));
}

bool bitwise_hermitian(const MetricMatrix& t) {
  for (int i = 0; i < t.n(); ++i)
    for (int j = 0; j < t.n(); ++j)
      if (t(i, j) != std::conj(t(j, i))) return false;
  return true;
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (auto f : {MetricFamily::prop2, MetricFamily::prop3, MetricFamily::n3_general,
                 MetricFamily::n3_special, MetricFamily::n4_special,
                 MetricFamily::nullspace_basis_element, MetricFamily::recurrence})
    CHECK(metric_family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(metric_family_from_string("bogus"), InvalidArgument);
}

TEST_CASE("prop2 entries") {
  const double w = 0.7;
  const MetricMatrix two = metric_prop2(2, w);
  CHECK(two(0, 0) == Complex(1.0));
  CHECK(two(0, 1) == Complex(0.0, -w));
  CHECK(two(1, 0) == Complex(0.0, w));

  CHECK(metric_prop2(9, 0.0).entries() == ComplexMatrix::identity(9));

  const MetricMatrix three = metric_prop2(3, w);
  CHECK(std::abs(three(0, 2) - Complex(-w * w, -w)) < 1e-15);
  CHECK(std::abs(three(2, 0) - Complex(-w * w, w)) < 1e-15);

  const MetricMatrix four = metric_prop2(4, w);
  CHECK(std::abs(four(0, 3) - Complex(-2.0 * w * w, w * w * w - w)) < 1e-15);
  CHECK(std::abs(four(1, 3) - Complex(-w * w, -w)) < 1e-15);
  CHECK(four(3, 3) == Complex(1.0));
}

TEST_CASE("prop3 entries") {
  CHECK(metric_prop3(7, 0.4, 0.0).entries() == metric_prop2(7, 0.4).entries());
  const MetricMatrix m = metric_prop3(2, 0.0, 0.3);
  CHECK(m(0, 1) == Complex(0.3));
  const auto ev = hermitian_eigenvalues(m);
  CHECK(ev[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.3).epsilon(1e-14));
  CHECK(verify(band_hamiltonian(2, 0.0), metric_prop3(2, 0.0, 0.99)).positive_definite);
  CHECK_FALSE(verify(band_hamiltonian(2, 0.0), metric_prop3(2, 0.0, 1.01)).positive_definite);
  for (int i = 0; i < 5; ++i) CHECK(m(i % 2, i % 2) == Complex(1.0));
}

TEST_CASE("recurrence seed and first steps") {
  const double w = 0.6;
  const MetricMatrix r = metric_recurrence(5, w);
  CHECK(r(0, 1) == Complex(0.0, -w));
  CHECK(std::abs(r(0, 2) - Complex(-w * w, -w)) < 1e-15);
  CHECK(r.family() == MetricFamily::recurrence);
}

TEST_CASE("closed form against recurrence") {
  double worst_abs_small = 0.0, worst_rel = 0.0;
  for (int n = 2; n <= 64; ++n)
    for (int i = 0; i <= 8; ++i) {
      const double w = -2.0 + 0.5 * i;
      for (double u : {-0.3, 0.0, 0.3}) {
        const MetricMatrix a = u == 0.0 ? metric_prop2(n, w) : metric_prop3(n, w, u);
        const MetricMatrix b = metric_recurrence(n, w, u);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            const double d = std::abs(a(p, q) - b(p, q));
            worst_rel = std::max(worst_rel, d / std::max(1.0, std::abs(a(p, q))));
            if (std::abs(w) <= 0.5 && n <= 16) worst_abs_small = std::max(worst_abs_small, d);
          }
      }
    }
  CHECK(worst_abs_small <= 1e-15);
  CHECK(worst_rel <= 1e-15);
}

TEST_CASE("N = 3 families") {
  const double xi = 0.8, u = 0.25;
  const MetricMatrix g = metric_n3_general(xi, 1.0, 1.0, u);
  const MetricMatrix s = metric_n3_special(xi, u);
  CHECK(max_entry_diff(g.entries(), s.entries()) < 1e-15);

  const double d = 1.0 + xi * xi;
  CHECK(std::abs(s(0, 1) - Complex(u, -xi / d)) < 1e-15);
  const Complex corner((u - xi * xi + u * xi * xi) / (d * d), -(u * xi * xi + 1.0 + u) * xi / (d * d));
  CHECK(std::abs(s(0, 2) - corner) < 1e-15);

  const double r = 1.7, sd = 0.6;
  const MetricMatrix z = metric_n3_general(0.0, r, sd, u);
  CHECK(z(0, 0) == Complex(r));
  CHECK(z(1, 1) == Complex(sd));
  CHECK(z(2, 2) == Complex(r));
  CHECK(z(0, 1) == Complex(u));
  CHECK(std::abs(z(0, 2) - Complex(sd - r + u)) < 1e-15);

  CHECK(metric_n3_special(0.0, 0.0).entries() == ComplexMatrix::identity(3));
}

TEST_CASE("N = 3 general family solves the intertwining relation") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> x(-5.0, 5.0), p(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double xi = x(rng);
    const MetricMatrix t = metric_n3_general(xi, p(rng), p(rng), p(rng));
    CHECK(dieudonne_residual(zeta0_hamiltonian(3, xi), t) <= 1e-13);
  }
}

TEST_CASE("N = 4 family") {
  CHECK(metric_n4_special(0.0).entries() == ComplexMatrix::identity(4));
  for (double xi : {-3.0, -0.4, 0.2, 1.0, 7.0}) {
    const MetricMatrix t = metric_n4_special(xi);
    CHECK(dieudonne_residual(zeta0_hamiltonian(4, xi), t) <= 1e-13);
    const double d = 1.0 + xi * xi;
    CHECK(std::abs(t(0, 3) - Complex(-2.0 * xi * xi / (d * d * d), -(1.0 - xi * xi) * xi / (d * d * d))) < 1e-15);
  }
  // the eigenvalues share one value in all three Hermitian limits
  for (double xi : {1e-6, 1e6, -1e6})
    for (double e : hermitian_eigenvalues(metric_n4_special(xi))) CHECK(std::abs(e - 1.0) < 1e-5);
}

TEST_CASE("Dirac limit gives the identity exactly") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(metric_prop2(n, 0.0).entries() == ComplexMatrix::identity(n));
    CHECK(metric_prop3(n, 0.0, 0.0).entries() == ComplexMatrix::identity(n));
    CHECK(metric_recurrence(n, 0.0).entries() == ComplexMatrix::identity(n));
  }
  CHECK(metric_n3_general(0.0, 1.0, 1.0, 0.0).entries() == ComplexMatrix::identity(3));
  CHECK(metric_n3_special(0.0, 0.0).entries() == ComplexMatrix::identity(3));
  CHECK(metric_n4_special(0.0).entries() == ComplexMatrix::identity(4));
}

TEST_CASE("every constructor is bitwise Hermitian") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> p(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + i % 20;
    CHECK(bitwise_hermitian(metric_prop2(n, p(rng))));
    CHECK(bitwise_hermitian(metric_prop3(n, p(rng), p(rng))));
    CHECK(bitwise_hermitian(metric_recurrence(n, p(rng), p(rng))));
    CHECK(bitwise_hermitian(metric_n3_general(p(rng), p(rng), p(rng), p(rng))));
    CHECK(bitwise_hermitian(metric_n3_special(p(rng), p(rng))));
    CHECK(bitwise_hermitian(metric_n4_special(p(rng))));
  }
}

TEST_CASE("Dieudonne residual") {
  for (double w : {-1.5, 0.3, 2.0}) {
    const double r = dieudonne_residual(band_hamiltonian(2, w), metric_prop2(2, 0.0));
    CHECK(r == doctest::Approx(2.0 * std::sqrt(2.0) * std::abs(w)).epsilon(1e-14));
  }
  const MetricMatrix t = metric_prop3(6, 0.9, 0.2);
  CHECK(dieudonne_residual(band_hamiltonian(6, 0.9, Convention::lattice), t) ==
        dieudonne_residual(band_hamiltonian(6, 0.9, Convention::shifted), t));
  CHECK_THROWS_AS(dieudonne_residual(band_hamiltonian(5, 0.9), t), DimensionMismatch);
}

TEST_CASE("band metrics intertwine for all N up to 64") {
  // Entries grow like (1 + w^2)^{k/2}; the absolute bound is checked where
  // they stay O(1) and the scale-relative one across the whole grid.
  for (int n = 2; n <= 64; ++n)
    for (int i = 0; i <= 8; ++i) {
      const double w = -2.0 + 0.5 * i;
      const auto h = band_hamiltonian(n, w);
      for (double u : {-0.3, 0.0, 0.3}) {
        for (const MetricMatrix& t : {metric_prop3(n, w, u), metric_recurrence(n, w, u)}) {
          const double r = dieudonne_residual(h, t);
          CHECK(r <= 1e-13 * n * std::max(1.0, t.entries().frobenius_norm()));
          if (std::abs(w) <= 0.5) CHECK(r <= 1e-13 * n);
        }
      }
    }
}

TEST_CASE("Jacobi eigenvalues") {
  for (double w : {0.0, 0.3, -0.8, 1.6}) {
    const auto ev = hermitian_eigenvalues(metric_prop2(2, w));
    CHECK(ev[0] == doctest::Approx(1.0 - std::abs(w)).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(1.0 + std::abs(w)).epsilon(1e-14));
  }
  for (double e : hermitian_eigenvalues(ComplexMatrix::identity(6))) CHECK(e == 1.0);

  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 25;
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
      a(i, i) = g(rng);
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = Complex(g(rng), g(rng));
        a(j, i) = std::conj(a(i, j));
      }
    }
    const auto ev = hermitian_eigenvalues(a);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    const auto ref = oracle::hermitian_eigenvalues(a);
    for (int i = 0; i < n; ++i) CHECK(std::abs(ev[i] - ref[i]) <= 1e-12 * a.frobenius_norm());
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += a(i, i).real();
    const double sum = std::accumulate(ev.begin(), ev.end(), 0.0);
    CHECK(std::abs(sum - trace) <= 1e-12 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST_CASE("Jacobi sweep limit") {
  JacobiOptions opts;
  opts.max_sweeps = 0;
  CHECK_THROWS_AS(hermitian_eigenvalues(metric_prop2(5, 0.5), opts), NoConvergence);
}

TEST_CASE("verify") {
  const VerificationReport ok = verify(band_hamiltonian(3, 0.2), metric_prop2(3, 0.2));
  CHECK(ok.dieudonne_residual <= 1e-13);
  CHECK(ok.positive_definite);
  CHECK(ok.eigenvalues.size() == 3);
  CHECK(ok.min_eigenvalue == ok.eigenvalues.front());

  CHECK_FALSE(verify(band_hamiltonian(3, 2.0), metric_prop2(3, 2.0)).positive_definite);
  CHECK(verify(band_hamiltonian(3, 0.5), metric_prop2(3, 0.0)).dieudonne_residual > 0.0);
}

TEST_CASE("positivity threshold at N = 2 meets the spectral threshold") {
  CHECK(verify(band_hamiltonian(2, 0.999999), metric_prop2(2, 0.999999)).positive_definite);
  CHECK_FALSE(verify(band_hamiltonian(2, 1.000001), metric_prop2(2, 1.000001)).positive_definite);
}

TEST_CASE("N = 3 and N = 4 metrics stay positive on the physical range") {
  for (int i = 0; i < 501; ++i) {
    const double xi = -50.0 + 0.2 * i;
    CHECK(verify(zeta0_hamiltonian(3, xi), metric_n3_special(xi, 0.0)).positive_definite);
    CHECK(verify(zeta0_hamiltonian(4, xi), metric_n4_special(xi)).positive_definite);
  }
  // one eigenvalue of the N = 3 metric dips below 1, none crosses zero
  double lowest = INFINITY;
  for (int i = 0; i < 501; ++i)
    lowest = std::min(lowest, hermitian_eigenvalues(metric_n3_special(-50.0 + 0.2 * i, 0.0)).front());
  CHECK(lowest < 0.9);
  CHECK(lowest > 0.0);
}

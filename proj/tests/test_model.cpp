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

#include <cmath>
#include <random>

#include "hermitize/errors.hpp"
#include "hermitize/model.hpp"

using namespace hermitize;

TEST_CASE("z map at the documented points") {
  CHECK(z_from_xizeta(0.0, 0.0) == Complex(1.0, 0.0));
  const Complex z3 = z_from_xizeta(0.0, 2.0 / 3.0);
  CHECK(std::abs(z3 - Complex(3.0, 0.0)) < 1e-14);
  CHECK(z_from_xizeta(1.0, 0.0) == Complex(0.5, 0.5));
  CHECK(z_from_xizeta(0.3, 0.1).imag() > 0.0);
  CHECK(z_from_xizeta(-0.3, 0.1).imag() < 0.0);
}

TEST_CASE("z map rejects the pole") {
  CHECK_THROWS_AS(z_from_xizeta(0.0, 1.0), SingularParameters);
  CHECK_THROWS_AS(reparametrize(0.0, 1.0), SingularParameters);
  CHECK_THROWS_AS(ModelParams::from_xi_zeta(4, 0.0, 1.0), SingularParameters);
  CHECK_NOTHROW(z_from_xizeta(0.5, 1.0));
}

TEST_CASE("xi parity of z is an exact conjugation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xi(-3.0, 3.0), zeta(-0.9, 0.9);
  for (int i = 0; i < 200; ++i) {
    const double x = xi(rng), s = zeta(rng);
    CHECK(z_from_xizeta(-x, s) == std::conj(z_from_xizeta(x, s)));
  }
}

TEST_CASE("reparametrize examples") {
  const OmegaRho origin = reparametrize(0.0, 0.0);
  CHECK(origin.omega == 0.0);
  CHECK(origin.rho == 0.0);
  const OmegaRho p = reparametrize(1.0, 0.0);
  CHECK(p.omega == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.rho == doctest::Approx(-0.5).epsilon(1e-15));
  for (double xi : {1e-2, 1e-3, -1e-3}) {
    const OmegaRho q = reparametrize(xi, 0.0);
    CHECK(std::abs(q.omega - xi) <= 2.0 * std::abs(xi * xi * xi));
    CHECK(std::abs(q.rho + xi * xi) <= 2.0 * std::pow(xi, 4));
  }
}

TEST_CASE("1 + rho + i omega reproduces z on a 100 x 100 grid") {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double xi = -2.0 + 4.0 * i / 99.0;
      const double zeta = -0.9 + 1.8 * j / 99.0;
      const OmegaRho w = reparametrize(xi, zeta);
      const Complex z = z_from_xizeta(xi, zeta);
      worst = std::max(worst, std::abs(z_from_omega_rho(w.omega, w.rho) - z) / std::abs(z));
    }
  CHECK(worst <= 1e-14);
}

TEST_CASE("shifted rho = 0 Hamiltonian at N = 3") {
  const double omega = 0.37;
  const auto h = build_hamiltonian(ModelParams::from_omega_rho(3, omega, 0.0, Convention::shifted));
  const ComplexMatrix m = dense_matrix(h);
  ComplexMatrix expected(3);
  expected(0, 0) = Complex(-1.0, -omega);
  expected(2, 2) = Complex(-1.0, omega);
  expected(0, 1) = expected(1, 0) = expected(1, 2) = expected(2, 1) = -1.0;
  CHECK(m == expected);
}

TEST_CASE("Hermitian two-site matrix") {
  const auto h = build_hamiltonian(ModelParams::from_xi_zeta(2, 0.0, 0.0, Convention::shifted));
  const ComplexMatrix m = dense_matrix(h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(m(i, j) == Complex(-1.0, 0.0));
}

TEST_CASE("dense write-out") {
  const ComplexMatrix a =
      dense_matrix(build_hamiltonian(ModelParams::from_omega_rho(2, 0.5, 0.0, Convention::shifted)));
  CHECK(a(0, 0) == Complex(-1.0, -0.5));
  CHECK(a(1, 1) == Complex(-1.0, 0.5));
  CHECK(a(0, 1) == Complex(-1.0, 0.0));
  CHECK(a(1, 0) == Complex(-1.0, 0.0));

  const ComplexMatrix b = dense_matrix(build_hamiltonian(ModelParams::from_xi_zeta(3, 0.0, 0.0)));
  CHECK(b(0, 0) == Complex(1.0));
  CHECK(b(1, 1) == Complex(2.0));
  CHECK(b(2, 2) == Complex(1.0));
  CHECK(b(0, 2) == Complex(0.0));
}

TEST_CASE("conventions differ by exactly 2 I") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 9;
    const auto p = ModelParams::from_xi_zeta(n, u(rng), 0.4 * u(rng));
    const ComplexMatrix lat = dense_matrix(build_hamiltonian(p));
    const ComplexMatrix sh = dense_matrix(build_hamiltonian(p.with_convention(Convention::shifted)));
    CHECK((lat - sh) == 2.0 * ComplexMatrix::identity(n));
    CHECK(dense_matrix(build_hamiltonian(p.with_convention(Convention::shifted))) + 2.0 * ComplexMatrix::identity(n) == lat);
  }
}

TEST_CASE("Hamiltonian structure invariants") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 12;
    for (auto conv : {Convention::lattice, Convention::shifted}) {
      const auto h = build_hamiltonian(ModelParams::from_xi_zeta(n, u(rng), 0.3 * u(rng), conv));
      const ComplexMatrix m = dense_matrix(h);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CHECK(m(i, j) == m(j, i));
          if (std::abs(i - j) == 1) CHECK(m(i, j) == Complex(-1.0));
          if (std::abs(i - j) > 1) CHECK(m(i, j) == Complex(0.0));
        }
      CHECK(h.corner_last - h.bulk_diagonal == std::conj(h.corner_first - h.bulk_diagonal));
    }
  }
}

TEST_CASE("dimension below two is rejected") {
  CHECK_THROWS_AS(ModelParams::from_xi_zeta(1, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(ModelParams::from_omega_rho(0, 0.0, 0.0), InvalidArgument);
}

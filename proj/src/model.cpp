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

#include "hermitize/model.hpp"

#include <string>

#include "hermitize/errors.hpp"

namespace hermitize {

std::string_view to_string(Convention c) {
  return c == Convention::lattice ? "lattice" : "shifted";
}

Convention convention_from_string(std::string_view s) {
  if (s == "lattice") return Convention::lattice;
  if (s == "shifted") return Convention::shifted;
  throw InvalidArgument("unknown convention '" + std::string(s) + "'");
}

double bulk_diagonal(Convention c) { return c == Convention::lattice ? 2.0 : 0.0; }

namespace {

double singular_denominator(double xi, double zeta) {
  const double a = 1.0 - zeta;
  const double d = a * a + xi * xi;
  if (!(d > 0.0))
    throw SingularParameters("end-point coupling diverges at zeta = 1, xi = 0");
  return d;
}

void require_dimension(int n) {
  if (n < 2) throw InvalidArgument("matrix dimension must be at least 2, got " + std::to_string(n));
}

}  // namespace

// Written out component-wise so that z(-xi) is the bitwise conjugate of z(xi).
Complex z_from_xizeta(double xi, double zeta) {
  const double d = singular_denominator(xi, zeta);
  return {(1.0 - zeta) / d, xi / d};
}

OmegaRho reparametrize(double xi, double zeta) {
  const double d = singular_denominator(xi, zeta);
  return {xi / d, (zeta - zeta * zeta - xi * xi) / d};
}

ModelParams ModelParams::from_xi_zeta(int n, double xi, double zeta, Convention convention) {
  require_dimension(n);
  return ModelParams(n, XiZeta{xi, zeta}, z_from_xizeta(xi, zeta), convention);
}

ModelParams ModelParams::from_omega_rho(int n, double omega, double rho,
                                        Convention convention) {
  require_dimension(n);
  return ModelParams(n, OmegaRho{omega, rho}, z_from_omega_rho(omega, rho), convention);
}

ModelParams ModelParams::with_convention(Convention c) const {
  ModelParams p = *this;
  p.convention_ = c;
  return p;
}

TridiagonalHamiltonian hamiltonian_from_z(int n, Complex z, Convention convention) {
  require_dimension(n);
  const double bulk = bulk_diagonal(convention);
  TridiagonalHamiltonian h;
  h.n = n;
  h.bulk_diagonal = bulk;
  h.corner_first = bulk - z;
  h.corner_last = bulk - std::conj(z);
  h.convention = convention;
  return h;
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params) {
  return hamiltonian_from_z(params.n(), params.z(), params.convention());
}

ComplexMatrix dense_matrix(const TridiagonalHamiltonian& h) {
  ComplexMatrix m(static_cast<std::size_t>(h.n));
  for (int k = 0; k < h.n; ++k) {
    m(k, k) = h.diagonal(k);
    if (k + 1 < h.n) {
      m(k, k + 1) = h.off_diagonal;
      m(k + 1, k) = h.off_diagonal;
    }
  }
  return m;
}

Complex energy_from_y(Complex y, Convention c) { return bulk_diagonal(c) - 2.0 * y; }

Complex y_from_energy(Complex energy, Convention c) {
  return (bulk_diagonal(c) - energy) / 2.0;
}

}  // namespace hermitize

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

#pragma once

#include <string_view>
#include <variant>

#include "hermitize/types.hpp"

namespace hermitize {

/// Bulk diagonal of the Hamiltonian: 2 on the lattice, 0 once shifted by -2I.
enum class Convention { lattice, shifted };

std::string_view to_string(Convention c);
Convention convention_from_string(std::string_view s);

/// Bulk diagonal value for a convention.
double bulk_diagonal(Convention c);

/// Lattice spacing times the two Robin constants.
struct XiZeta {
  double xi = 0.0;
  double zeta = 0.0;
};

/// Coordinates in which the end-point coupling reads z = 1 + rho + i omega.
struct OmegaRho {
  double omega = 0.0;
  double rho = 0.0;
};

/// z = 1/(1 - zeta - i xi). Throws SingularParameters at zeta = 1, xi = 0.
Complex z_from_xizeta(double xi, double zeta);

/// Maps (xi, zeta) onto (omega, rho) with z = 1 + rho + i omega.
OmegaRho reparametrize(double xi, double zeta);

inline Complex z_from_omega_rho(double omega, double rho) { return {1.0 + rho, omega}; }

class ModelParams {
 public:
  static ModelParams from_xi_zeta(int n, double xi, double zeta,
                                  Convention convention = Convention::lattice);
  static ModelParams from_omega_rho(int n, double omega, double rho,
                                    Convention convention = Convention::lattice);

  int n() const { return n_; }
  Convention convention() const { return convention_; }
  const std::variant<XiZeta, OmegaRho>& coupling() const { return coupling_; }
  /// End-point coupling; conj(z) sits in the last corner.
  Complex z() const { return z_; }

  ModelParams with_convention(Convention c) const;

 private:
  ModelParams(int n, std::variant<XiZeta, OmegaRho> coupling, Complex z, Convention c)
      : n_(n), coupling_(coupling), z_(z), convention_(c) {}

  int n_;
  std::variant<XiZeta, OmegaRho> coupling_;
  Complex z_;
  Convention convention_;
};

/// N x N tridiagonal matrix with bulk diagonal, -1 hopping and complex corners
/// bulk - z and bulk - conj(z).
struct TridiagonalHamiltonian {
  int n = 0;
  Complex corner_first;
  Complex corner_last;
  double bulk_diagonal = 0.0;
  double off_diagonal = -1.0;
  Convention convention = Convention::lattice;

  /// Diagonal entry at 0-based index k.
  Complex diagonal(int k) const {
    if (k == 0) return corner_first;
    if (k == n - 1) return corner_last;
    return bulk_diagonal;
  }
};

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params);

/// Hamiltonian with corners -z, -conj(z) plus the convention's bulk, for any z.
TridiagonalHamiltonian hamiltonian_from_z(int n, Complex z, Convention convention);

ComplexMatrix dense_matrix(const TridiagonalHamiltonian& h);

/// E = 2 - 2y on the lattice, E = -2y shifted.
Complex energy_from_y(Complex y, Convention c);
Complex y_from_energy(Complex energy, Convention c);

}  // namespace hermitize

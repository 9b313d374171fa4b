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

#include <optional>
#include <vector>

#include "hermitize/chebyshev.hpp"
#include "hermitize/model.hpp"
#include "hermitize/roots.hpp"
#include "hermitize/types.hpp"

namespace hermitize {

/// Below this |y| the closed-form wavefunction switches to the y = 0 branch.
inline constexpr double kYZeroThreshold = 1e-8;

/// Reality cut: a root counts as real when |Im y| <= real_tol * max(1, |y|).
inline constexpr double kDefaultRealTol = 1e-9;

struct SpectrumOptions {
  double root_tol = 1e-12;
  double real_tol = kDefaultRealTol;
  int max_iterations = 500;
};

/// Energy variables y_n = (bulk - E_n)/2 and their energies.
struct Spectrum {
  int n = 0;
  Convention convention = Convention::lattice;
  std::vector<Complex> y_roots;
  std::vector<Complex> energies;
  std::vector<bool> reality_flags;
  int n_real = 0;
  int n_complex_pairs = 0;

  /// arccos(y_i) for real roots inside [-1, 1]; empty otherwise.
  std::optional<double> gamma(std::size_t i) const;
};

/// Secular combination |z|^2 U_{N-2} - 2 Re(z) U_{N-1} + U_N.
ChebCombo secular_polynomial(int n, Complex z);

/// Secular equation after y = cos(gamma) and multiplication by sin(gamma).
double trig_secular(int n, Complex z, double gamma);

/// Flags each root real or complex under the scale-aware cut and counts
/// conjugate pairs. The flags are made pair-consistent so that
/// n_real + 2 n_complex_pairs always equals the number of roots.
struct RootClassification {
  std::vector<bool> reality_flags;
  int n_real = 0;
  int n_complex_pairs = 0;
};
RootClassification classify_roots(const std::vector<Complex>& y_roots, double real_tol);

Spectrum spectrum_from_roots(int n, Convention convention, std::vector<Complex> y_roots,
                             double real_tol = kDefaultRealTol);

Spectrum solve_spectrum(const ModelParams& params, const SpectrumOptions& options = {});

/// Spectrum for an arbitrary end-point coupling z (z = 0 is the hard wall).
Spectrum solve_spectrum_for_z(int n, Complex z, Convention convention,
                              const SpectrumOptions& options = {});

enum class WavefunctionBranch { generic, y_zero };

struct Wavefunction {
  std::vector<Complex> components;  ///< phi_1 ... phi_N, phi_1 = 1
  Complex y;
  WavefunctionBranch branch = WavefunctionBranch::generic;
  /// False when y failed the secular-root check (relative level 1e-8).
  bool root_verified = true;
};

/// Closed-form eigenvector for the energy variable y, phi_n = U_{n-1}(y) - z U_{n-2}(y)
/// (the ansatz with A = z/y, B = 1 - A, free of the division by y). It is
/// evaluated from both ends of the chain and joined at its largest component.
Wavefunction wavefunction(int n, Complex z, Complex y);
Wavefunction wavefunction(const ModelParams& params, Complex y);

/// ||(H - E) phi|| / ||phi||.
double residual(const TridiagonalHamiltonian& h, Complex energy, const Wavefunction& phi);
double residual(const TridiagonalHamiltonian& h, Complex energy, const std::vector<Complex>& phi);

/// Monomial coefficients (ascending) of det(lambda I - H) from the
/// continuant recurrence P_k = (lambda - d_k) P_{k-1} - P_{k-2}.
std::vector<Complex> charpoly_coefficients(const TridiagonalHamiltonian& h);

/// Eigenvalues of H from its characteristic polynomial, independent of the
/// Chebyshev route. Roots of the coefficient polynomial are refined by the
/// same iteration evaluating the continuant directly. Sorted.
std::vector<Complex> charpoly_oracle(const TridiagonalHamiltonian& h, double tol = 1e-12);

}  // namespace hermitize

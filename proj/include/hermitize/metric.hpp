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
#include <string_view>
#include <vector>

#include "hermitize/model.hpp"
#include "hermitize/types.hpp"

namespace hermitize {

enum class MetricFamily {
  prop2,        ///< u = 0 band metric, Theta(0) = I; params {omega}
  prop3,        ///< prop2 + u * Theta_1; params {omega, u}
  n3_general,   ///< complete N = 3, zeta = 0 solution; params {xi, r, s, u}
  n3_special,   ///< r = s = 1 member of n3_general; params {xi, u}
  n4_special,   ///< unit-diagonal N = 4, zeta = 0 metric with u1 = 0; params {xi}
  nullspace_basis_element,
  recurrence,   ///< prop3 band rebuilt from the real two-term recurrence; params {omega, u}
};

std::string_view to_string(MetricFamily f);
MetricFamily metric_family_from_string(std::string_view s);

/// Hermitian candidate metric. Entries are written only through
/// set_diagonal/set_upper, so entry(j, i) == conj(entry(i, j)) holds bitwise.
class MetricMatrix {
 public:
  MetricMatrix(int n, MetricFamily family, std::vector<double> params);

  int n() const { return n_; }
  MetricFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }

  void set_diagonal(int i, double value);
  /// Sets entry (i, j) for i < j and its conjugate mirror.
  void set_upper(int i, int j, Complex value);

 private:
  int n_;
  MetricFamily family_;
  std::vector<double> params_;
  ComplexMatrix entries_;
};

/// Theta_nn = 1, Theta_{n,n+k} = -i omega (1 - i omega)^{k-1}.
MetricMatrix metric_prop2(int n, double omega);

/// metric_prop2 plus u times the zero-diagonal band (1 - i omega)^{k-1}.
MetricMatrix metric_prop3(int n, double omega, double u);

/// Same band as metric_prop3, generated by
///   q1' = q1 + omega q2,  q2' = q2 - omega q1,  q(1) = (1, 0),
/// with the entry at offset k equal to (u - i omega) (q1 + i q2) at step k.
/// For u = 0 the entries p = -i omega q obey the same recurrence, starting
/// from p(2) = (0, -omega).
MetricMatrix metric_recurrence(int n, double omega, double u = 0.0);

/// Three-parameter family solving the N = 3, zeta = 0 intertwining relation.
MetricMatrix metric_n3_general(double xi, double r, double s, double u);

/// r = s = 1 member of the N = 3 family written out directly.
MetricMatrix metric_n3_special(double xi, double u);

/// N = 4, zeta = 0, unit diagonal, u1 = 0.
MetricMatrix metric_n4_special(double xi);

/// Frobenius norm of H^dagger Theta - Theta H.
double dieudonne_residual(const TridiagonalHamiltonian& h, const MetricMatrix& theta);

struct JacobiOptions {
  int max_sweeps = 100;
  double tol = 1e-13;  ///< off-diagonal norm relative to ||Theta||_F
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// ascending. Throws NoConvergence after max_sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const JacobiOptions& options = {});
std::vector<double> hermitian_eigenvalues(const MetricMatrix& theta,
                                          const JacobiOptions& options = {});

struct VerificationReport {
  double dieudonne_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool positive_definite = false;
  std::vector<double> eigenvalues;
};

/// Residual plus positivity; tol_pd defaults to 1e-12 ||Theta||_F.
VerificationReport verify(const TridiagonalHamiltonian& h, const MetricMatrix& theta,
                          std::optional<double> tol_pd = std::nullopt);

struct NullspaceResult {
  /// Frobenius-orthonormal Hermitian basis of {Theta : H^dagger Theta = Theta H}.
  std::vector<MetricMatrix> basis;
  /// Set when the dimension exceeds N, which signals a degenerate spectrum.
  bool degenerate_spectrum = false;
  int rank = 0;
};

/// Dense real elimination over the N^2 real parameters of a Hermitian
/// Theta. Pivots below tol_rank times the largest pivot count as zero.
/// Requires N <= 16.
NullspaceResult dieudonne_nullspace(const TridiagonalHamiltonian& h, double tol_rank = 1e-10);

/// Re tr(A^dagger B).
double frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||Theta - P Theta||_F / ||Theta||_F for P the projector onto the span of
/// an orthonormal basis.
double projection_residual(const MetricMatrix& theta, const std::vector<MetricMatrix>& basis);

}  // namespace hermitize

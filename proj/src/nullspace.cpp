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
#include <numeric>

#include "hermitize/errors.hpp"
#include "hermitize/metric.hpp"

namespace hermitize {

namespace {

// Real coordinates of a Hermitian N x N matrix: N diagonal reals followed by
// (Re, Im) of each strictly upper entry in row-major order.
struct HermitianCoordinates {
  int n;
  int count() const { return n * n; }

  ComplexMatrix unit(int k) const {
    ComplexMatrix e(static_cast<std::size_t>(n));
    if (k < n) {
      e(k, k) = 1.0;
      return e;
    }
    int idx = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, idx += 2) {
        if (k == idx) {
          e(i, j) = 1.0;
          e(j, i) = 1.0;
          return e;
        }
        if (k == idx + 1) {
          e(i, j) = Complex{0.0, 1.0};
          e(j, i) = Complex{0.0, -1.0};
          return e;
        }
      }
    return e;
  }

  // Coordinates are orthogonal under Re tr(A^dagger B); off-diagonal ones
  // have squared norm 2.
  double weight(int k) const { return k < n ? 1.0 : 2.0; }

  MetricMatrix assemble(const std::vector<double>& x) const {
    MetricMatrix m(n, MetricFamily::nullspace_basis_element, {});
    for (int i = 0; i < n; ++i) m.set_diagonal(i, x[i]);
    int idx = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, idx += 2) m.set_upper(i, j, {x[idx], x[idx + 1]});
    return m;
  }
};

using Dense = std::vector<std::vector<double>>;

}  // namespace

NullspaceResult dieudonne_nullspace(const TridiagonalHamiltonian& h, double tol_rank) {
  if (h.n > 16) throw InvalidArgument("dense nullspace solve is limited to N <= 16");
  const HermitianCoordinates coords{h.n};
  const int unknowns = coords.count();
  const std::size_t n = static_cast<std::size_t>(h.n);
  const int rows = 2 * h.n * h.n;

  const ComplexMatrix hm = dense_matrix(h);
  const ComplexMatrix hd = hm.adjoint();
  Dense a(static_cast<std::size_t>(rows), std::vector<double>(static_cast<std::size_t>(unknowns)));
  for (int k = 0; k < unknowns; ++k) {
    const ComplexMatrix e = coords.unit(k);
    const ComplexMatrix m = hd * e - e * hm;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = 2 * (i * n + j);
        a[r][k] = m(i, j).real();
        a[r + 1][k] = m(i, j).imag();
      }
  }

  // Gauss-Jordan with complete pivoting; perm maps working column -> unknown.
  std::vector<int> perm(static_cast<std::size_t>(unknowns));
  std::iota(perm.begin(), perm.end(), 0);
  int rank = 0;
  double largest_pivot = 0.0;
  for (; rank < std::min(rows, unknowns); ++rank) {
    int pr = -1, pc = -1;
    double best = 0.0;
    for (int i = rank; i < rows; ++i)
      for (int j = rank; j < unknowns; ++j)
        if (std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (rank == 0) largest_pivot = best;
    if (pr < 0 || best <= tol_rank * largest_pivot) break;
    std::swap(a[rank], a[pr]);
    if (pc != rank) {
      for (auto& row : a) std::swap(row[rank], row[pc]);
      std::swap(perm[rank], perm[pc]);
    }
    const double pivot = a[rank][rank];
    for (auto& v : a[rank]) v /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const double f = a[i][rank];
      if (f == 0.0) continue;
      for (int j = rank; j < unknowns; ++j) a[i][j] -= f * a[rank][j];
    }
  }

  std::vector<std::vector<double>> vectors;
  for (int free = rank; free < unknowns; ++free) {
    std::vector<double> x(static_cast<std::size_t>(unknowns), 0.0);
    x[perm[free]] = 1.0;
    for (int i = 0; i < rank; ++i) x[perm[i]] = -a[i][free];
    vectors.push_back(std::move(x));
  }

  // Modified Gram-Schmidt under the Frobenius product, applied twice.
  auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (int k = 0; k < unknowns; ++k) s += coords.weight(k) * u[k] * v[k];
    return s;
  };
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < i; ++j) {
        const double c = inner(vectors[j], vectors[i]);
        for (int k = 0; k < unknowns; ++k) vectors[i][k] -= c * vectors[j][k];
      }
    const double norm = std::sqrt(inner(vectors[i], vectors[i]));
    for (auto& v : vectors[i]) v /= norm;
  }

  NullspaceResult result;
  result.rank = rank;
  for (const auto& v : vectors) result.basis.push_back(coords.assemble(v));
  result.degenerate_spectrum = static_cast<int>(result.basis.size()) > h.n;
  return result;
}

}  // namespace hermitize

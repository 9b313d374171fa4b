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

#include <functional>
#include <span>
#include <vector>

#include "hermitize/chebyshev.hpp"
#include "hermitize/types.hpp"

namespace hermitize {

struct RootOptions {
  /// Newton-step acceptance, relative to max(1, |root|).
  double tol = 1e-12;
  int max_iterations = 500;
  /// Initial guesses sit on this circle around `center`.
  double initial_radius = 1.2;
  Complex center = 0.0;
};

using PolyEvaluator = std::function<ComboValue(Complex)>;

/// Aberth-Ehrlich simultaneous iteration for all `degree` roots of the
/// polynomial behind `eval`.
///
/// A root is accepted once its Newton step falls below
/// tol * max(1, |root|), or once |p(root)| is at the rounding-noise floor
/// reported by the evaluator (this is what ends the iteration at clustered
/// or multiple roots, where the Newton step stalls). The result is sorted
/// by real part, then imaginary part. Throws NoConvergence carrying the last
/// iterate.
std::vector<Complex> simultaneous_roots(int degree, const PolyEvaluator& eval,
                                        const RootOptions& options = {},
                                        std::span<const Complex> initial = {});

/// All roots of a U-basis combination.
std::vector<Complex> find_roots(const ChebCombo& p, double tol = 1e-12, int max_iterations = 500);

/// Lexicographic (real, imaginary) order.
void sort_roots(std::vector<Complex>& roots);

/// Sorts both sequences, pairs each element of `a` greedily with its nearest
/// unused element of `b`, and returns the largest pair distance.
double max_pairing_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace hermitize

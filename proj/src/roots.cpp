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

#include "hermitize/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hermitize/errors.hpp"

namespace hermitize {

namespace {

// Irrational offset keeps the starting circle off the real axis and off
// any symmetry line of a real polynomial.
constexpr double kAngleOffset = 0.5 * std::numbers::inv_sqrtpi;
constexpr double kNoiseFactor = 8.0 * std::numeric_limits<double>::epsilon();

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<Complex> simultaneous_roots(int degree, const PolyEvaluator& eval,
                                        const RootOptions& options,
                                        std::span<const Complex> initial) {
  if (degree < 1) throw InvalidArgument("root finding needs degree >= 1");
  const auto d = static_cast<std::size_t>(degree);

  std::vector<Complex> z;
  if (!initial.empty()) {
    if (initial.size() != d) throw DimensionMismatch("initial guess count differs from degree");
    z.assign(initial.begin(), initial.end());
  } else {
    z.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / degree + kAngleOffset;
      z[k] = options.center + std::polar(options.initial_radius, angle);
    }
  }

  std::vector<char> done(d, 0);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      const ComboValue v = eval(z[i]);
      const bool overflow = !finite(v.value) || !finite(v.derivative);
      const bool at_noise_floor = !overflow && std::abs(v.value) <= kNoiseFactor * v.magnitude;
      if (!at_noise_floor) all_done = false;

      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      // Far from every root p/p' tends to (z - center)/degree; use that once
      // the evaluation overflows.
      const Complex ratio =
          overflow ? (z[i] - options.center) / static_cast<double>(degree) : v.value / v.derivative;
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!finite(step)) {
        // Stationary point or coincident iterates: nudge and retry.
        z[i] += std::polar(1e-7 * std::max(1.0, std::abs(z[i])), kAngleOffset * (iter + 1.0));
        continue;
      }
      // The step is applied even at the noise floor, which costs nothing
      // when the floor estimate is tight and helps when it is pessimistic.
      z[i] -= step;
      if (at_noise_floor || std::abs(step) <= options.tol * std::max(1.0, std::abs(z[i])))
        done[i] = 1;
    }
    if (all_done) {
      sort_roots(z);
      return z;
    }
  }
  if (std::all_of(done.begin(), done.end(), [](char c) { return c != 0; })) {
    sort_roots(z);
    return z;
  }
  throw NoConvergence("simultaneous root iteration did not converge in " +
                          std::to_string(options.max_iterations) + " iterations",
                      z);
}

std::vector<Complex> find_roots(const ChebCombo& p, double tol, int max_iterations) {
  RootOptions options;
  options.tol = tol;
  options.max_iterations = max_iterations;
  return simultaneous_roots(
      p.degree(), [&p](Complex y) { return eval_combo(p, y); }, options);
}

double max_pairing_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) throw DimensionMismatch("cannot pair sequences of different length");
  sort_roots(a);
  sort_roots(b);
  std::vector<char> used(b.size(), 0);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(x - b[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[best] = 1;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

}  // namespace hermitize

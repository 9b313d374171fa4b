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

#include "hermitize/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "hermitize/errors.hpp"

namespace hermitize {

std::optional<double> Spectrum::gamma(std::size_t i) const {
  if (i >= y_roots.size() || !reality_flags[i]) return std::nullopt;
  const double y = y_roots[i].real();
  if (y < -1.0 || y > 1.0) return std::nullopt;
  return std::acos(y);
}

ChebCombo secular_polynomial(int n, Complex z) {
  if (n < 2) throw InvalidArgument("secular polynomial needs n >= 2");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[n - 2] = std::norm(z);
  c[n - 1] = -2.0 * z.real();
  c[n] = 1.0;
  return ChebCombo(std::move(c));
}

double trig_secular(int n, Complex z, double gamma) {
  return std::norm(z) * std::sin((n - 1) * gamma) - 2.0 * z.real() * std::sin(n * gamma) +
         std::sin((n + 1) * gamma);
}

RootClassification classify_roots(const std::vector<Complex>& y_roots, double real_tol) {
  RootClassification out;
  const std::size_t n = y_roots.size();
  out.reality_flags.assign(n, false);
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex y = y_roots[i];
    if (std::abs(y.imag()) <= real_tol * std::max(1.0, std::abs(y))) {
      out.reality_flags[i] = true;
    } else {
      (y.imag() > 0 ? upper : lower).push_back(i);
    }
  }
  // A pair straddling the cut would leave an unmatched root; demote the
  // least imaginary roots of the larger half-plane.
  auto by_imag = [&](std::size_t a, std::size_t b) {
    return std::abs(y_roots[a].imag()) < std::abs(y_roots[b].imag());
  };
  auto& larger = upper.size() > lower.size() ? upper : lower;
  const std::size_t target = std::min(upper.size(), lower.size());
  std::sort(larger.begin(), larger.end(), by_imag);
  while (larger.size() > target) {
    out.reality_flags[larger.front()] = true;
    larger.erase(larger.begin());
  }
  out.n_complex_pairs = static_cast<int>(target);
  out.n_real = static_cast<int>(n) - 2 * out.n_complex_pairs;
  return out;
}

Spectrum spectrum_from_roots(int n, Convention convention, std::vector<Complex> y_roots,
                             double real_tol) {
  sort_roots(y_roots);
  Spectrum s;
  s.n = n;
  s.convention = convention;
  s.energies.reserve(y_roots.size());
  for (const Complex& y : y_roots) s.energies.push_back(energy_from_y(y, convention));
  auto cls = classify_roots(y_roots, real_tol);
  s.y_roots = std::move(y_roots);
  s.reality_flags = std::move(cls.reality_flags);
  s.n_real = cls.n_real;
  s.n_complex_pairs = cls.n_complex_pairs;
  return s;
}

namespace {

using ExtComplex = std::complex<long double>;

// Secular coefficients |z|^2 and 2 Re z, carried in extended precision.
struct ExtCoefficients {
  long double norm2;
  long double twice_re;
};

ExtCoefficients ext_coefficients(Complex z) {
  const long double re = z.real(), im = z.imag();
  return {re * re + im * im, 2.0L * re};
}

ExtCoefficients ext_coefficients(const ModelParams& params) {
  if (const auto* xz = std::get_if<XiZeta>(&params.coupling())) {
    // With D = (1 - zeta)^2 + xi^2: |z|^2 = 1/D and 2 Re z = 2 (1 - zeta)/D.
    const long double a = 1.0L - xz->zeta, xi = xz->xi;
    const long double d = a * a + xi * xi;
    return {1.0L / d, 2.0L * a / d};
  }
  return ext_coefficients(params.z());
}

struct ExtValue {
  ExtComplex value;
  ExtComplex derivative;
  ExtComplex second;
};

ExtValue eval_ext(int n, const ExtCoefficients& c, ExtComplex y) {
  auto coeff = [&](int k) -> long double {
    if (k == n) return 1.0L;
    if (k == n - 1) return -c.twice_re;
    if (k == n - 2) return c.norm2;
    return 0.0L;
  };
  const ExtComplex two_y = 2.0L * y;
  ExtComplex b1 = 0.0L, b2 = 0.0L, d1 = 0.0L, d2 = 0.0L, e1 = 0.0L, e2 = 0.0L;
  for (int k = n; k >= 0; --k) {
    const ExtComplex b0 = coeff(k) + two_y * b1 - b2;
    const ExtComplex d0 = 2.0L * b1 + two_y * d1 - d2;
    const ExtComplex e0 = 4.0L * d1 + two_y * e1 - e2;
    b2 = b1;
    b1 = b0;
    d2 = d1;
    d1 = d0;
    e2 = e1;
    e1 = e0;
  }
  return {b1, d1, e1};
}

// Two iterates closer than this (relative) are treated as one cluster.
constexpr double kClusterGap = 1e-6;

// Replaces each close pair by the roots of the quadratic Taylor model about
// its midpoint. A conjugate pair of iterates stays conjugate under Aberth
// steps, so without this a pair of nearby real roots is never resolved.
void split_clusters(int n, const ExtCoefficients& c, std::vector<ExtComplex>& y) {
  std::vector<char> used(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (used[i]) continue;
    std::size_t best = y.size();
    long double best_gap = kClusterGap * std::max(1.0L, std::abs(y[i]));
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == i || used[j]) continue;
      const long double gap = std::abs(y[i] - y[j]);
      if (gap < best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best == y.size()) continue;
    used[i] = used[best] = 1;
    ExtComplex mid = 0.5L * (y[i] + y[best]);
    if (std::abs(mid.imag()) <= best_gap) mid = mid.real();
    const ExtValue v = eval_ext(n, c, mid);
    if (v.second == ExtComplex(0.0L)) continue;
    const ExtComplex disc = std::sqrt(v.derivative * v.derivative - 2.0L * v.second * v.value);
    // Larger-magnitude branch first, then the product of roots, to avoid
    // cancellation.
    const ExtComplex q = -v.derivative - (std::real(std::conj(v.derivative) * disc) < 0 ? -disc : disc);
    if (q == ExtComplex(0.0L)) {
      y[i] = y[best] = mid;
      continue;
    }
    const ExtComplex t1 = q / v.second, t2 = 2.0L * v.value / q;
    y[i] = mid + t1;
    y[best] = mid + t2;
  }
}

// A few Aberth corrections in extended precision. Near-coincident roots,
// which double evaluation resolves only to about sqrt(eps), gain most. A
// correction is kept only when it does not increase |P|.
void polish_roots(int n, const ExtCoefficients& c, std::vector<Complex>& roots) {
  constexpr int kMaxPasses = 30;
  constexpr long double kStepFloor = 64.0L * std::numeric_limits<long double>::epsilon();
  std::vector<ExtComplex> y(roots.begin(), roots.end());
  split_clusters(n, c, y);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool moved = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const ExtValue v = eval_ext(n, c, y[i]);
      if (v.value == ExtComplex(0.0L)) continue;
      ExtComplex repulsion = 0.0L;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (j != i) repulsion += 1.0L / (y[i] - y[j]);
      const ExtComplex ratio = v.value / v.derivative;
      const ExtComplex step = ratio / (1.0L - ratio * repulsion);
      const ExtComplex next = y[i] - step;
      if (!std::isfinite(std::abs(next))) continue;
      if (std::abs(eval_ext(n, c, next).value) > std::abs(v.value)) continue;
      if (std::abs(step) > kStepFloor * std::max(1.0L, std::abs(y[i]))) moved = true;
      y[i] = next;
    }
    if (!moved) break;
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    roots[i] = Complex(static_cast<double>(y[i].real()), static_cast<double>(y[i].imag()));
  sort_roots(roots);
}

Spectrum solve_with(int n, Complex z, const ExtCoefficients& ext, Convention convention,
                    const SpectrumOptions& options) {
  auto roots = find_roots(secular_polynomial(n, z), options.root_tol, options.max_iterations);
  polish_roots(n, ext, roots);
  return spectrum_from_roots(n, convention, std::move(roots), options.real_tol);
}

}  // namespace

Spectrum solve_spectrum_for_z(int n, Complex z, Convention convention,
                              const SpectrumOptions& options) {
  return solve_with(n, z, ext_coefficients(z), convention, options);
}

Spectrum solve_spectrum(const ModelParams& params, const SpectrumOptions& options) {
  return solve_with(params.n(), params.z(), ext_coefficients(params), params.convention(),
                    options);
}

// With A = z/y and B = 1 - A, the identity T_k = U_k - y U_{k-1} turns
// A T_{k} + B U_{k} into U_k - z U_{k-1}, which is free of the 1/y pole.
Wavefunction wavefunction(int n, Complex z, Complex y) {
  if (n < 2) throw InvalidArgument("wavefunction needs n >= 2");
  Wavefunction phi;
  phi.y = y;
  phi.components.resize(static_cast<std::size_t>(n));

  const ComboValue check = eval_combo(secular_polynomial(n, z), y);
  phi.root_verified = std::abs(check.value) <= 1e-8 * std::max(check.magnitude, 1.0);

  if (std::abs(y) < kYZeroThreshold) {
    phi.branch = WavefunctionBranch::y_zero;
    for (int site = 1; site <= n; ++site) {
      if (site % 2 == 1) {
        const int m = (site + 1) / 2;
        phi.components[site - 1] = (m + 1) % 2 == 0 ? 1.0 : -1.0;
      } else {
        const int m = site / 2;
        phi.components[site - 1] = (m % 2 == 0 ? 1.0 : -1.0) * z;
      }
    }
    return phi;
  }

  // forward[k] = U_k(y) - z U_{k-1}(y) is the closed form. Run alone it
  // loses digits wherever the eigenvector decays into the chain, so the
  // mirror solution is run in from the far end and the two are joined at
  // the largest component.
  phi.branch = WavefunctionBranch::generic;
  const auto size = static_cast<std::size_t>(n);
  const Complex two_y = 2.0 * y;
  std::vector<Complex> forward(size), backward(size);
  forward[0] = 1.0;
  forward[1] = two_y - z;
  backward[size - 1] = 1.0;
  backward[size - 2] = two_y - std::conj(z);
  for (std::size_t k = 2; k < size; ++k) {
    forward[k] = two_y * forward[k - 1] - forward[k - 2];
    backward[size - 1 - k] = two_y * backward[size - k] - backward[size - k + 1];
  }
  std::size_t join = 0;
  double peak = -1.0;
  for (std::size_t k = 0; k < size; ++k) {
    const double weight = std::abs(forward[k] * backward[k]);
    if (weight > peak) {
      peak = weight;
      join = k;
    }
  }
  const Complex scale = backward[join] == 0.0 ? Complex(0.0) : forward[join] / backward[join];
  for (std::size_t k = 0; k < size; ++k)
    phi.components[k] = k <= join ? forward[k] : scale * backward[k];
  return phi;
}

Wavefunction wavefunction(const ModelParams& params, Complex y) {
  return wavefunction(params.n(), params.z(), y);
}

double residual(const TridiagonalHamiltonian& h, Complex energy, const std::vector<Complex>& phi) {
  if (static_cast<int>(phi.size()) != h.n)
    throw DimensionMismatch("wavefunction length differs from Hamiltonian dimension");
  double num = 0.0, den = 0.0;
  for (int k = 0; k < h.n; ++k) {
    Complex row = (h.diagonal(k) - energy) * phi[k];
    if (k > 0) row += h.off_diagonal * phi[k - 1];
    if (k + 1 < h.n) row += h.off_diagonal * phi[k + 1];
    num += std::norm(row);
    den += std::norm(phi[k]);
  }
  return std::sqrt(num / den);
}

double residual(const TridiagonalHamiltonian& h, Complex energy, const Wavefunction& phi) {
  return residual(h, energy, phi.components);
}

std::vector<Complex> charpoly_coefficients(const TridiagonalHamiltonian& h) {
  const double hop2 = h.off_diagonal * h.off_diagonal;
  std::vector<Complex> prev{1.0};
  std::vector<Complex> cur{-h.diagonal(0), 1.0};
  for (int k = 1; k < h.n; ++k) {
    std::vector<Complex> next(cur.size() + 1, 0.0);
    const Complex d = h.diagonal(k);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] += cur[j];
      next[j] -= d * cur[j];
    }
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= hop2 * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

ComboValue horner(const std::vector<Complex>& c, Complex x) {
  Complex value = 0.0, derivative = 0.0;
  double magnitude = 0.0;
  const double ax = std::abs(x);
  for (std::size_t j = c.size(); j-- > 0;) {
    derivative = derivative * x + value;
    value = value * x + c[j];
    magnitude = magnitude * ax + std::abs(c[j]);
  }
  return {value, derivative, magnitude};
}

ComboValue continuant(const TridiagonalHamiltonian& h, Complex lambda) {
  // magnitude sums the terms of every step, as in eval_combo, rather than
  // propagating them through the recurrence (which would grow like 3^N).
  const double hop2 = h.off_diagonal * h.off_diagonal;
  const double abs_lambda = std::abs(lambda);
  Complex p_prev = 1.0, p_cur = lambda - h.diagonal(0);
  Complex d_prev = 0.0, d_cur = 1.0;
  double magnitude = abs_lambda + std::abs(h.diagonal(0));
  for (int k = 1; k < h.n; ++k) {
    const Complex a = lambda - h.diagonal(k);
    const Complex p_next = a * p_cur - hop2 * p_prev;
    const Complex d_next = p_cur + a * d_cur - hop2 * d_prev;
    magnitude += (abs_lambda + std::abs(h.diagonal(k))) * std::abs(p_cur) + hop2 * std::abs(p_prev);
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return {p_cur, d_cur, magnitude};
}

}  // namespace

std::vector<Complex> charpoly_oracle(const TridiagonalHamiltonian& h, double tol) {
  // Coarse pass on the coefficients of H - bulk, whose roots sit in a disc
  // around the origin; the continuant then refines against H itself.
  TridiagonalHamiltonian centred = h;
  centred.corner_first -= h.bulk_diagonal;
  centred.corner_last -= h.bulk_diagonal;
  centred.bulk_diagonal = 0.0;
  const auto coeffs = charpoly_coefficients(centred);
  RootOptions options;
  options.tol = tol;
  options.initial_radius = 2.4;
  std::vector<Complex> coarse;
  try {
    coarse = simultaneous_roots(
        h.n, [&coeffs](Complex x) { return horner(coeffs, x); }, options);
  } catch (const NoConvergence& e) {
    coarse = e.best_iterate();
  }
  for (auto& x : coarse) x += h.bulk_diagonal;
  options.center = h.bulk_diagonal;
  return simultaneous_roots(
      h.n, [&h](Complex x) { return continuant(h, x); }, options, coarse);
}

}  // namespace hermitize

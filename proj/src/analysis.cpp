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

#include "hermitize/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "hermitize/errors.hpp"

namespace hermitize {

namespace {

// Evaluates fn(i) for i in [0, count) on up to `threads` workers; slot i of
// the result always holds fn(i). The first exception is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn fn) {
  using T = decltype(fn(std::size_t{0}));
  std::vector<std::optional<T>> slots(count);
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(count, 1));
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < count; i += workers) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

SweepResult run_sweep(std::string axis_name, std::vector<double> axis, int threads,
                      const std::function<Spectrum(double)>& solve) {
  SweepResult result;
  result.axis_name = std::move(axis_name);
  result.records = parallel_map(axis.size(), threads, [&](std::size_t i) { return solve(axis[i]); });
  result.axis_values = std::move(axis);
  return result;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidArgument("grid needs at least one point");
  if (steps == 1) {
    if (lo != hi) throw InvalidArgument("a single-point grid needs equal end points");
    return {lo};
  }
  if (!(hi > lo)) throw InvalidArgument("grid end points must be strictly increasing");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[i] = lo + (hi - lo) * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

SweepResult sweep_xi(int n, double zeta, double xi_min, double xi_max, int steps,
                     const AnalysisOptions& options) {
  if (steps < 2) throw InvalidArgument("xi sweep needs at least two points");
  return run_sweep("xi", uniform_grid(xi_min, xi_max, steps), options.threads, [&](double xi) {
    return solve_spectrum(ModelParams::from_xi_zeta(n, xi, zeta, options.convention),
                          options.spectrum);
  });
}

SweepResult sweep_zeta(int n, double xi, double zeta_min, double zeta_max, int steps,
                       const AnalysisOptions& options) {
  return run_sweep("zeta", uniform_grid(zeta_min, zeta_max, steps), options.threads,
                   [&](double zeta) {
                     return solve_spectrum(
                         ModelParams::from_xi_zeta(n, xi, zeta, options.convention),
                         options.spectrum);
                   });
}

SweepResult sweep_omega(int n, double rho, double omega_min, double omega_max, int steps,
                        const AnalysisOptions& options) {
  if (steps < 2) throw InvalidArgument("omega sweep needs at least two points");
  return run_sweep("omega", uniform_grid(omega_min, omega_max, steps), options.threads,
                   [&](double omega) {
                     return solve_spectrum(
                         ModelParams::from_omega_rho(n, omega, rho, options.convention),
                         options.spectrum);
                   });
}

bool real_on_xi_grid(int n, double zeta, double xi_max, int xi_steps,
                     const SpectrumOptions& options) {
  for (double xi : uniform_grid(0.0, xi_max, xi_steps)) {
    const Spectrum s = solve_spectrum(ModelParams::from_xi_zeta(n, xi, zeta), options);
    if (s.n_complex_pairs > 0) return false;
  }
  return true;
}

CriticalResult critical_zeta(int n, double xi_max, int xi_steps, double zeta_tol,
                             const SpectrumOptions& options) {
  if (n < 2) throw InvalidArgument("critical_zeta needs n >= 2");
  if (!(zeta_tol > 0.0)) throw InvalidArgument("zeta tolerance must be positive");
  auto real = [&](double zeta) { return real_on_xi_grid(n, zeta, xi_max, xi_steps, options); };

  double lo = 0.0;
  if (!real(lo)) throw NoConvergence("spectrum is already complex at zeta = 0");
  double hi = 0.0625;
  while (real(hi)) {
    lo = hi;
    if (hi >= 0.999) throw NoConvergence("no loss of reality found below zeta = 1");
    hi = std::min(2.0 * hi, 0.999);
  }
  while (hi - lo > zeta_tol) {
    const double mid = 0.5 * (lo + hi);
    (real(mid) ? lo : hi) = mid;
  }

  CriticalResult result;
  result.n = n;
  result.bracket = {lo, hi};
  result.zeta_critical = 0.5 * (lo + hi);
  result.xi_max = xi_max;
  result.xi_steps = xi_steps;
  std::ostringstream spec;
  spec << "uniform xi grid on [0, " << xi_max << "] with " << xi_steps << " points";
  result.xi_grid_spec = spec.str();
  return result;
}

std::string family_parameter_name(MetricFamily family) {
  switch (family) {
    case MetricFamily::prop2:
    case MetricFamily::prop3:
    case MetricFamily::recurrence:
      return "omega";
    default:
      return "xi";
  }
}

MetricMatrix make_metric(const MetricFamilySpec& spec, int n, double parameter) {
  auto require_n = [&](int expected) {
    if (n != expected)
      throw InvalidArgument(std::string(to_string(spec.family)) + " exists only at N = " +
                            std::to_string(expected));
  };
  switch (spec.family) {
    case MetricFamily::prop2:
      return metric_prop2(n, parameter);
    case MetricFamily::prop3:
      return metric_prop3(n, parameter, spec.u);
    case MetricFamily::recurrence:
      return metric_recurrence(n, parameter, spec.u);
    case MetricFamily::n3_general:
      require_n(3);
      return metric_n3_general(parameter, spec.r, spec.s, spec.u);
    case MetricFamily::n3_special:
      require_n(3);
      return metric_n3_special(parameter, spec.u);
    case MetricFamily::n4_special:
      require_n(4);
      return metric_n4_special(parameter);
    case MetricFamily::nullspace_basis_element:
      break;
  }
  throw InvalidArgument("nullspace basis elements are not a parametrized family");
}

TridiagonalHamiltonian family_hamiltonian(const MetricFamilySpec& spec, int n, double parameter,
                                          Convention convention) {
  if (family_parameter_name(spec.family) == "omega")
    return build_hamiltonian(ModelParams::from_omega_rho(n, parameter, 0.0, convention));
  return build_hamiltonian(ModelParams::from_xi_zeta(n, parameter, 0.0, convention));
}

MetricSweepResult metric_positivity_sweep(const MetricFamilySpec& spec, int n, double param_min,
                                          double param_max, int steps,
                                          const AnalysisOptions& options) {
  MetricSweepResult result;
  result.axis_name = family_parameter_name(spec.family);
  result.axis_values = uniform_grid(param_min, param_max, steps);
  const auto& axis = result.axis_values;
  result.eigenvalues = parallel_map(axis.size(), options.threads, [&](std::size_t i) {
    return hermitian_eigenvalues(make_metric(spec, n, axis[i]));
  });

  auto min_eig = [&](double p) { return hermitian_eigenvalues(make_metric(spec, n, p)).front(); };
  auto lost = [](double e) { return e <= 0.0; };

  std::optional<double> best;
  auto consider = [&](double p) {
    if (!best || std::abs(p) < std::abs(*best)) best = p;
  };
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const bool here = lost(result.eigenvalues[i].front());
    if (!here) continue;
    const bool left_ok = i > 0 && !lost(result.eigenvalues[i - 1].front());
    const bool right_ok = i + 1 < axis.size() && !lost(result.eigenvalues[i + 1].front());
    if (!left_ok && !right_ok) consider(axis[i]);
    // Bisect each positive -> non-positive edge; `bad` keeps min eig <= 0.
    for (int side : {-1, 1}) {
      if ((side < 0 && !left_ok) || (side > 0 && !right_ok)) continue;
      double good = axis[i + side];
      double bad = axis[i];
      while (std::abs(bad - good) > 1e-7) {
        const double mid = 0.5 * (good + bad);
        (lost(min_eig(mid)) ? bad : good) = mid;
      }
      consider(0.5 * (good + bad));
    }
  }
  if (best) result.threshold = std::abs(*best);
  return result;
}

std::vector<ContinuumRow> continuum_convergence(const std::vector<int>& m_values, int levels) {
  std::vector<ContinuumRow> rows;
  for (int m : m_values) {
    if (m < 2) throw InvalidArgument("continuum check needs M >= 2");
    const int sites = 2 * m - 1;
    if (levels > sites) throw InvalidArgument("more levels requested than lattice sites");
    // Hard walls: z = 0, lattice convention; ascending real energies.
    const Spectrum s = solve_spectrum_for_z(sites, 0.0, Convention::lattice);
    std::vector<double> numeric;
    for (const Complex& e : s.energies) numeric.push_back(e.real());
    std::sort(numeric.begin(), numeric.end());
    const double scale = 0.25 * (2.0 * m + 1.0) * (2.0 * m + 1.0);
    for (int level = 0; level < levels; ++level) {
      ContinuumRow row;
      row.m = m;
      row.level = level;
      const double k = level + 1.0;
      row.energy = 2.0 - 2.0 * std::cos(k * std::numbers::pi / (2.0 * m));
      row.energy_numeric = numeric[level];
      row.rescaled = row.energy * scale;
      row.limit = std::pow(k * std::numbers::pi / 2.0, 2);
      row.relative_deviation = (row.rescaled - row.limit) / row.limit;
      rows.push_back(row);
    }
  }
  return rows;
}

double richardson_limit(const std::vector<double>& m_values, const std::vector<double>& values) {
  if (m_values.size() != values.size() || values.empty())
    throw InvalidArgument("extrapolation needs matching, non-empty samples");
  const std::size_t k = values.size();
  std::vector<double> h(k), p(values);
  for (std::size_t i = 0; i < k; ++i) h[i] = 1.0 / m_values[i];
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = 0; i + level < k; ++i)
      p[i] = (h[i] * p[i + 1] - h[i + level] * p[i]) / (h[i] - h[i + level]);
  return p[0];
}

EndpointLoci endpoint_locus(int n, int samples) {
  if (n < 2) throw InvalidArgument("endpoint locus needs n >= 2");
  if (samples < 2) throw InvalidArgument("endpoint locus needs at least two samples");
  EndpointLoci loci;
  loci.n = n;
  const double np1 = n + 1.0;

  loci.plus_one.y = 1.0;
  loci.plus_one.formula = "xi^2 = -zeta^2 + 2 zeta / (N+1), 0 <= zeta <= 2/(N+1)";
  for (double zeta : uniform_grid(0.0, 2.0 / np1, samples)) {
    const double xi2 = -zeta * zeta + 2.0 * zeta / np1;
    loci.plus_one.points.push_back({std::sqrt(std::max(0.0, xi2)), zeta});
  }

  loci.minus_one.y = -1.0;
  loci.minus_one.formula =
      "(xi, zeta) = rho (sin delta, cos delta), cos delta = (4N + (N+1) rho^2) / ((4N+2) rho), "
      "2 - 2/(N+1) <= rho <= 2";
  for (double rho : uniform_grid(2.0 - 2.0 / np1, 2.0, samples)) {
    const double zeta = (4.0 * n + np1 * rho * rho) / (4.0 * n + 2.0);
    loci.minus_one.points.push_back({std::sqrt(std::max(0.0, rho * rho - zeta * zeta)), zeta});
  }
  return loci;
}

RealityClassification classify_reality(const Spectrum& spectrum, double tol, double merge_gap) {
  const auto cls = classify_roots(spectrum.y_roots, tol);
  RealityClassification out;
  out.n_real = cls.n_real;
  out.n_complex_pairs = cls.n_complex_pairs;
  const std::size_t n = spectrum.y_roots.size();
  out.pre_critical.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!cls.reality_flags[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !cls.reality_flags[j]) continue;
      if (std::abs(spectrum.y_roots[i].real() - spectrum.y_roots[j].real()) < merge_gap)
        out.pre_critical[i] = true;
    }
  }
  return out;
}

}  // namespace hermitize

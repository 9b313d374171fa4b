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
#include <string>
#include <utility>
#include <vector>

#include "hermitize/metric.hpp"
#include "hermitize/model.hpp"
#include "hermitize/spectrum.hpp"

namespace hermitize {

struct AnalysisOptions {
  SpectrumOptions spectrum;
  Convention convention = Convention::lattice;
  /// Worker threads for grid sweeps; results never depend on this.
  int threads = 1;
};

/// `steps` equally spaced values from lo to hi inclusive. steps == 1 needs lo == hi.
std::vector<double> uniform_grid(double lo, double hi, int steps);

struct SweepResult {
  std::string axis_name;
  std::vector<double> axis_values;
  std::vector<Spectrum> records;
};

SweepResult sweep_xi(int n, double zeta, double xi_min, double xi_max, int steps,
                     const AnalysisOptions& options = {});

/// zeta = 1 is a pole only at xi = 0; there a grid point hitting it throws.
SweepResult sweep_zeta(int n, double xi, double zeta_min, double zeta_max, int steps,
                       const AnalysisOptions& options = {});

/// Sweep along omega at fixed rho.
SweepResult sweep_omega(int n, double rho, double omega_min, double omega_max, int steps,
                        const AnalysisOptions& options = {});

struct CriticalResult {
  int n = 0;
  double zeta_critical = 0.0;
  /// Predicate holds at first, fails at second.
  std::pair<double, double> bracket;
  double xi_max = 0.0;
  int xi_steps = 0;
  std::string xi_grid_spec;
};

/// True when every spectrum on the uniform grid xi in [0, xi_max] is real.
bool real_on_xi_grid(int n, double zeta, double xi_max, int xi_steps,
                     const SpectrumOptions& options = {});

/// Bisection on zeta for the onset of complex energies anywhere on the xi
/// grid. Grid-sampled: a complex window narrower than the grid step can be
/// missed, biasing the result upward.
CriticalResult critical_zeta(int n, double xi_max = 10.0, int xi_steps = 2000,
                             double zeta_tol = 1e-5, const SpectrumOptions& options = {});

struct MetricFamilySpec {
  MetricFamily family = MetricFamily::prop2;
  double u = 0.0;
  double r = 1.0;
  double s = 1.0;
};

/// Name of the swept parameter: "omega" for the band families, "xi" otherwise.
std::string family_parameter_name(MetricFamily family);

MetricMatrix make_metric(const MetricFamilySpec& spec, int n, double parameter);

/// Hamiltonian a family is built for: rho = 0 for the band families,
/// zeta = 0 for the N = 3, 4 families.
TridiagonalHamiltonian family_hamiltonian(const MetricFamilySpec& spec, int n, double parameter,
                                          Convention convention = Convention::shifted);

struct MetricSweepResult {
  std::string axis_name;
  std::vector<double> axis_values;
  std::vector<std::vector<double>> eigenvalues;
  /// Smallest |parameter| with min eigenvalue <= 0, to 1e-6.
  std::optional<double> threshold;
};

MetricSweepResult metric_positivity_sweep(const MetricFamilySpec& spec, int n, double param_min,
                                          double param_max, int steps,
                                          const AnalysisOptions& options = {});

struct ContinuumRow {
  int m = 0;
  int level = 0;           ///< 0 = ground state
  double energy = 0.0;     ///< 2 - 2 cos((level+1) pi / (2M))
  double energy_numeric = 0.0;  ///< same level from the secular roots at z = 0
  double rescaled = 0.0;   ///< energy * ((2M+1)/2)^2
  double limit = 0.0;      ///< ((level+1) pi / 2)^2
  double relative_deviation = 0.0;
};

/// Hard-wall lattice of 2M - 1 sites against the continuum square well.
std::vector<ContinuumRow> continuum_convergence(const std::vector<int>& m_values, int levels = 2);

/// Polynomial extrapolation in h = 1/M to h = 0 (Neville).
double richardson_limit(const std::vector<double>& m_values, const std::vector<double>& values);

struct LocusPoint {
  double xi = 0.0;
  double zeta = 0.0;
};

struct EndpointLocus {
  double y = 0.0;
  std::string formula;
  std::vector<LocusPoint> points;
};

struct EndpointLoci {
  int n = 0;
  EndpointLocus plus_one;
  EndpointLocus minus_one;
};

/// Parameter curves on which y = +1 or y = -1 solves the secular equation.
EndpointLoci endpoint_locus(int n, int samples = 20);

struct RealityClassification {
  int n_real = 0;
  int n_complex_pairs = 0;
  /// Real roots whose nearest real neighbour lies closer than merge_gap.
  std::vector<bool> pre_critical;
};

RealityClassification classify_reality(const Spectrum& spectrum, double tol = kDefaultRealTol,
                                       double merge_gap = 1e-4);

}  // namespace hermitize

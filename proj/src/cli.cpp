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

#include "hermitize/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermitize/analysis.hpp"
#include "hermitize/errors.hpp"
#include "hermitize/metric.hpp"
#include "hermitize/model.hpp"
#include "hermitize/spectrum.hpp"

namespace hermitize::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 4;
  double xi = 0.0, zeta = 0.0, omega = 0.0, rho = 0.0;
  double u = 0.0, r = 1.0, s = 1.0;
  std::string family;
  std::string convention = "lattice";
  double tol = 1e-12;
  int max_iter = 500;
  std::string out_path;
  std::string format = "csv";

  int root = -1;
  std::string axis = "xi";
  double min = 0.0, max = 1.0;
  int steps = 101;
  double xi_max = 10.0;
  int xi_steps = 2000;
  double zeta_tol = 1e-5;
  std::vector<int> m_values{10, 20, 40, 80, 100, 160, 200};
  int levels = 2;
  int samples = 20;
  double rank_tol = 1e-10;
  int threads = 1;
};

std::string num(double v) { return format_number(v); }

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Matrix dimension N");
  sub->add_option("--xi", o.xi, "Robin parameter xi");
  sub->add_option("--zeta", o.zeta, "Robin parameter zeta");
  sub->add_option("--omega", o.omega, "Reparametrized coupling omega");
  sub->add_option("--rho", o.rho, "Reparametrized coupling rho");
  sub->add_option("--u", o.u, "Metric family parameter u");
  sub->add_option("--family", o.family, "Metric family")
      ->check(CLI::IsMember({"prop2", "prop3", "recurrence", "n3_general", "n3_special",
                             "n4_special"}));
  sub->add_option("--convention", o.convention, "lattice (bulk 2) or shifted (bulk 0)")
      ->check(CLI::IsMember({"lattice", "shifted"}));
  sub->add_option("--tol", o.tol, "Root tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", o.max_iter, "Root iteration cap")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out_path, "Output file (default: standard output)");
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

bool given(const CLI::App* sub, const char* name) { return sub->count(name) > 0; }

bool omega_style(const CLI::App* sub) {
  const bool xz = given(sub, "--xi") || given(sub, "--zeta");
  const bool om = given(sub, "--omega") || given(sub, "--rho");
  if (xz && om) throw UsageError("use either --xi/--zeta or --omega/--rho, not both");
  return om;
}

Convention convention_of(const Options& o) { return convention_from_string(o.convention); }

ModelParams model_params(const Options& o, const CLI::App* sub) {
  if (omega_style(sub)) return ModelParams::from_omega_rho(o.n, o.omega, o.rho, convention_of(o));
  return ModelParams::from_xi_zeta(o.n, o.xi, o.zeta, convention_of(o));
}

json params_json(const ModelParams& p) {
  if (const auto* xz = std::get_if<XiZeta>(&p.coupling()))
    return {{"xi", xz->xi}, {"zeta", xz->zeta}};
  const auto& om = std::get<OmegaRho>(p.coupling());
  return {{"omega", om.omega}, {"rho", om.rho}};
}

double axis_value(const ModelParams& p) {
  if (const auto* xz = std::get_if<XiZeta>(&p.coupling())) return xz->xi;
  return std::get<OmegaRho>(p.coupling()).omega;
}

json spectrum_json(const Spectrum& s) {
  json energies = json::array();
  for (std::size_t i = 0; i < s.energies.size(); ++i)
    energies.push_back({{"re", s.energies[i].real()},
                        {"im", s.energies[i].imag()},
                        {"is_real", static_cast<bool>(s.reality_flags[i])}});
  json roots = json::array();
  for (const Complex& y : s.y_roots) roots.push_back(complex_json(y));
  return {{"energies", energies},
          {"y_roots", roots},
          {"n_real", s.n_real},
          {"n_complex_pairs", s.n_complex_pairs}};
}

void spectrum_header(std::ostream& os) { os << "axis,index,re_E,im_E,is_real\n"; }

void spectrum_rows(std::ostream& os, double axis, const Spectrum& s) {
  for (std::size_t i = 0; i < s.energies.size(); ++i)
    os << num(axis) << ',' << i << ',' << num(s.energies[i].real()) << ','
       << num(s.energies[i].imag()) << ',' << (s.reality_flags[i] ? 1 : 0) << '\n';
}

void eigen_rows(std::ostream& os, double axis, const std::vector<double>& eig) {
  for (std::size_t i = 0; i < eig.size(); ++i)
    os << num(axis) << ',' << i << ',' << num(eig[i]) << '\n';
}

SpectrumOptions spectrum_options(const Options& o) {
  SpectrumOptions so;
  so.root_tol = o.tol;
  so.max_iterations = o.max_iter;
  return so;
}

// --- metric family plumbing -------------------------------------------------

struct FamilyInput {
  MetricFamilySpec spec;
  int n = 0;
  double parameter = 0.0;
  json params;
};

FamilyInput family_input(const Options& o, const CLI::App* sub) {
  if (o.family.empty()) throw UsageError("--family is required");
  FamilyInput in;
  in.spec.family = metric_family_from_string(o.family);
  in.spec.u = o.u;
  in.spec.r = o.r;
  in.spec.s = o.s;
  const bool band = family_parameter_name(in.spec.family) == "omega";
  in.n = o.n;
  if (!given(sub, "--n")) {
    if (in.spec.family == MetricFamily::n3_general || in.spec.family == MetricFamily::n3_special)
      in.n = 3;
    if (in.spec.family == MetricFamily::n4_special) in.n = 4;
  }
  if (band) {
    if (given(sub, "--xi") || given(sub, "--zeta"))
      throw UsageError(o.family + " is parametrized by --omega (rho = 0)");
    if (given(sub, "--rho") && o.rho != 0.0)
      throw UsageError(o.family + " exists only on the rho = 0 line");
    in.parameter = o.omega;
    in.params = {{"omega", o.omega}};
    if (in.spec.family != MetricFamily::prop2) in.params["u"] = o.u;
  } else {
    if (given(sub, "--omega") || given(sub, "--rho"))
      throw UsageError(o.family + " is parametrized by --xi (zeta = 0)");
    if (given(sub, "--zeta") && o.zeta != 0.0)
      throw UsageError(o.family + " exists only at zeta = 0");
    in.parameter = o.xi;
    in.params = {{"xi", o.xi}};
    if (in.spec.family == MetricFamily::n3_general) {
      in.params["r"] = o.r;
      in.params["s"] = o.s;
    }
    if (in.spec.family != MetricFamily::n4_special) in.params["u"] = o.u;
  }
  return in;
}

json matrix_json(const MetricMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// --- subcommands ------------------------------------------------------------

void cmd_spectrum(const Options& o, const CLI::App* sub, std::ostream& os) {
  const ModelParams p = model_params(o, sub);
  const Spectrum s = solve_spectrum(p, spectrum_options(o));
  if (o.format == "json") {
    json j = spectrum_json(s);
    j["n"] = p.n();
    j["convention"] = std::string(to_string(p.convention()));
    j["params"] = params_json(p);
    os << j.dump(2) << '\n';
  } else {
    spectrum_header(os);
    spectrum_rows(os, axis_value(p), s);
  }
}

void cmd_wavefn(const Options& o, const CLI::App* sub, std::ostream& os) {
  const ModelParams p = model_params(o, sub);
  const Spectrum s = solve_spectrum(p, spectrum_options(o));
  const TridiagonalHamiltonian h = build_hamiltonian(p);
  if (o.root >= static_cast<int>(s.y_roots.size()))
    throw UsageError("--root exceeds the number of roots");
  json roots = json::array();
  std::ostringstream csv;
  csv << "root,site,re_phi,im_phi,residual\n";
  for (std::size_t i = 0; i < s.y_roots.size(); ++i) {
    if (o.root >= 0 && static_cast<int>(i) != o.root) continue;
    const Wavefunction phi = wavefunction(p, s.y_roots[i]);
    const double res = residual(h, s.energies[i], phi);
    json comps = json::array();
    for (std::size_t k = 0; k < phi.components.size(); ++k) {
      comps.push_back(complex_json(phi.components[k]));
      csv << i << ',' << k + 1 << ',' << num(phi.components[k].real()) << ','
          << num(phi.components[k].imag()) << ',' << num(res) << '\n';
    }
    roots.push_back({{"index", i},
                     {"y", complex_json(s.y_roots[i])},
                     {"energy", complex_json(s.energies[i])},
                     {"branch", phi.branch == WavefunctionBranch::y_zero ? "y_zero" : "generic"},
                     {"residual", res},
                     {"components", comps}});
  }
  if (o.format == "json") {
    os << json{{"n", p.n()}, {"params", params_json(p)}, {"roots", roots}}.dump(2) << '\n';
  } else {
    os << csv.str();
  }
}

void cmd_metric(const Options& o, const CLI::App* sub, std::ostream& os) {
  const FamilyInput in = family_input(o, sub);
  const MetricMatrix m = make_metric(in.spec, in.n, in.parameter);
  const auto eig = hermitian_eigenvalues(m);
  if (o.format == "json") {
    os << json{{"n", in.n},
               {"family", o.family},
               {"params", in.params},
               {"entries", matrix_json(m)},
               {"eigenvalues", eig}}
              .dump(2)
       << '\n';
  } else {
    os << "axis,index,eigenvalue\n";
    eigen_rows(os, in.parameter, eig);
  }
}

void cmd_verify(const Options& o, const CLI::App* sub, std::ostream& os) {
  const FamilyInput in = family_input(o, sub);
  const MetricMatrix m = make_metric(in.spec, in.n, in.parameter);
  const TridiagonalHamiltonian h =
      family_hamiltonian(in.spec, in.n, in.parameter, convention_of(o));
  const VerificationReport report = verify(h, m);

  const Complex z = h.bulk_diagonal - h.corner_first;
  const Spectrum s = solve_spectrum_for_z(in.n, z, h.convention, spectrum_options(o));
  double max_res = 0.0;
  for (std::size_t i = 0; i < s.y_roots.size(); ++i)
    max_res = std::max(max_res, residual(h, s.energies[i], wavefunction(in.n, z, s.y_roots[i])));

  if (o.format == "json") {
    os << json{{"n", in.n},
               {"family", o.family},
               {"params", in.params},
               {"dieudonne_residual", report.dieudonne_residual},
               {"min_metric_eigenvalue", report.min_eigenvalue},
               {"positive_definite", report.positive_definite},
               {"max_wavefn_residual", max_res}}
              .dump(2)
       << '\n';
  } else {
    std::string params;
    for (auto it = in.params.begin(); it != in.params.end(); ++it) {
      if (!params.empty()) params += ';';
      params += it.key() + "=" + num(it.value().get<double>());
    }
    os << "n,family,params,dieudonne_residual,min_metric_eigenvalue,positive_definite,"
          "max_wavefn_residual\n"
       << in.n << ',' << o.family << ',' << params << ',' << num(report.dieudonne_residual)
       << ',' << num(report.min_eigenvalue) << ',' << (report.positive_definite ? 1 : 0) << ','
       << num(max_res) << '\n';
  }
}

void cmd_nullspace(const Options& o, const CLI::App* sub, std::ostream& os) {
  const ModelParams p = model_params(o, sub);
  const NullspaceResult ns = dieudonne_nullspace(build_hamiltonian(p), o.rank_tol);
  if (o.format == "json") {
    json basis = json::array();
    for (const auto& b : ns.basis) basis.push_back(matrix_json(b));
    os << json{{"n", p.n()},
               {"params", params_json(p)},
               {"dimension", ns.basis.size()},
               {"rank", ns.rank},
               {"degenerate_spectrum", ns.degenerate_spectrum},
               {"basis", basis}}
              .dump(2)
       << '\n';
  } else {
    os << "element,row,col,re,im\n";
    for (std::size_t e = 0; e < ns.basis.size(); ++e)
      for (int i = 0; i < p.n(); ++i)
        for (int j = 0; j < p.n(); ++j)
          os << e << ',' << i << ',' << j << ',' << num(ns.basis[e](i, j).real()) << ','
             << num(ns.basis[e](i, j).imag()) << '\n';
  }
}

void cmd_sweep(const Options& o, const CLI::App* sub, std::ostream& os) {
  AnalysisOptions ao;
  ao.spectrum = spectrum_options(o);
  ao.convention = convention_of(o);
  ao.threads = o.threads;

  if (!o.family.empty()) {
    const FamilyInput in = family_input(o, sub);
    const auto result = metric_positivity_sweep(in.spec, in.n, o.min, o.max, o.steps, ao);
    if (o.format == "json") {
      json records = json::array();
      for (std::size_t i = 0; i < result.axis_values.size(); ++i)
        records.push_back({{"axis", result.axis_values[i]}, {"eigenvalues", result.eigenvalues[i]}});
      json j{{"axis_name", result.axis_name},
             {"family", o.family},
             {"n", in.n},
             {"records", records}};
      j["threshold"] = result.threshold ? json(*result.threshold) : json(nullptr);
      os << j.dump(2) << '\n';
    } else {
      os << "axis,index,eigenvalue\n";
      for (std::size_t i = 0; i < result.axis_values.size(); ++i)
        eigen_rows(os, result.axis_values[i], result.eigenvalues[i]);
    }
    return;
  }

  SweepResult result;
  if (o.axis == "xi") {
    if (given(sub, "--omega") || given(sub, "--rho")) throw UsageError("xi sweeps take --zeta");
    result = sweep_xi(o.n, o.zeta, o.min, o.max, o.steps, ao);
  } else if (o.axis == "zeta") {
    if (given(sub, "--omega") || given(sub, "--rho")) throw UsageError("zeta sweeps take --xi");
    result = sweep_zeta(o.n, o.xi, o.min, o.max, o.steps, ao);
  } else {
    if (given(sub, "--xi") || given(sub, "--zeta")) throw UsageError("omega sweeps take --rho");
    result = sweep_omega(o.n, o.rho, o.min, o.max, o.steps, ao);
  }
  if (o.format == "json") {
    json records = json::array();
    for (std::size_t i = 0; i < result.records.size(); ++i) {
      json r = spectrum_json(result.records[i]);
      r["axis"] = result.axis_values[i];
      records.push_back(r);
    }
    os << json{{"axis_name", result.axis_name}, {"n", o.n}, {"records", records}}.dump(2) << '\n';
  } else {
    spectrum_header(os);
    for (std::size_t i = 0; i < result.records.size(); ++i)
      spectrum_rows(os, result.axis_values[i], result.records[i]);
  }
}

void cmd_critical(const Options& o, const CLI::App*, std::ostream& os) {
  const CriticalResult c = critical_zeta(o.n, o.xi_max, o.xi_steps, o.zeta_tol, spectrum_options(o));
  if (o.format == "json") {
    os << json{{"n", c.n},
               {"zeta_critical", c.zeta_critical},
               {"bracket", {c.bracket.first, c.bracket.second}},
               {"xi_max", c.xi_max},
               {"xi_steps", c.xi_steps},
               {"xi_grid_spec", c.xi_grid_spec}}
              .dump(2)
       << '\n';
  } else {
    os << "n,zeta_critical,bracket_lo,bracket_hi,xi_max,xi_steps\n"
       << c.n << ',' << num(c.zeta_critical) << ',' << num(c.bracket.first) << ','
       << num(c.bracket.second) << ',' << num(c.xi_max) << ',' << c.xi_steps << '\n';
  }
}

void cmd_continuum(const Options& o, const CLI::App*, std::ostream& os) {
  const auto rows = continuum_convergence(o.m_values, o.levels);
  if (o.format == "json") {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back({{"m", r.m},
                    {"level", r.level},
                    {"energy", r.energy},
                    {"energy_numeric", r.energy_numeric},
                    {"rescaled", r.rescaled},
                    {"limit", r.limit},
                    {"relative_deviation", r.relative_deviation}});
    json limits = json::array();
    for (int level = 0; level < o.levels; ++level) {
      std::vector<double> ms, vs;
      for (const auto& r : rows)
        if (r.level == level) {
          ms.push_back(r.m);
          vs.push_back(r.rescaled);
        }
      limits.push_back(richardson_limit(ms, vs));
    }
    os << json{{"rows", jr}, {"extrapolated", limits}}.dump(2) << '\n';
  } else {
    os << "m,level,energy,energy_numeric,rescaled,limit,relative_deviation\n";
    for (const auto& r : rows)
      os << r.m << ',' << r.level << ',' << num(r.energy) << ',' << num(r.energy_numeric) << ','
         << num(r.rescaled) << ',' << num(r.limit) << ',' << num(r.relative_deviation) << '\n';
  }
}

void cmd_locus(const Options& o, const CLI::App*, std::ostream& os) {
  const EndpointLoci loci = endpoint_locus(o.n, o.samples);
  if (o.format == "json") {
    auto locus_json = [](const EndpointLocus& l) {
      json pts = json::array();
      for (const auto& p : l.points) pts.push_back({{"xi", p.xi}, {"zeta", p.zeta}});
      return json{{"y", l.y}, {"formula", l.formula}, {"points", pts}};
    };
    os << json{{"n", loci.n},
               {"plus_one", locus_json(loci.plus_one)},
               {"minus_one", locus_json(loci.minus_one)}}
              .dump(2)
       << '\n';
  } else {
    os << "locus,index,xi,zeta\n";
    for (const auto* l : {&loci.plus_one, &loci.minus_one})
      for (std::size_t i = 0; i < l->points.size(); ++i)
        os << (l->y > 0 ? "+1" : "-1") << ',' << i << ',' << num(l->points[i].xi) << ','
           << num(l->points[i].zeta) << '\n';
  }
}

int read_thread_count() {
  const char* env = std::getenv("HERMITIZE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024)
    throw UsageError("HERMITIZE_THREADS must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectra and metric operators of the non-Hermitian discrete square well",
               "hermitize"};
  app.require_subcommand(1);

  using Handler = void (*)(const Options&, const CLI::App*, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    commands.emplace_back(sub, h);
    return sub;
  };

  add("spectrum", "Energies from the secular equation", cmd_spectrum);
  add("wavefn", "Closed-form wavefunctions and residuals", cmd_wavefn)
      ->add_option("--root", o.root, "Only this root index");
  add("metric", "Build a metric family member and its eigenvalues", cmd_metric)
      ->add_option("--r", o.r, "n3_general parameter r");
  commands.back().first->add_option("--s", o.s, "n3_general parameter s");
  add("verify", "Check the intertwining relation and positivity", cmd_verify)
      ->add_option("--r", o.r, "n3_general parameter r");
  commands.back().first->add_option("--s", o.s, "n3_general parameter s");
  add("nullspace", "Hermitian solutions of H^dagger Theta = Theta H", cmd_nullspace)
      ->add_option("--rank-tol", o.rank_tol, "Relative pivot cutoff");
  {
    CLI::App* sub = add("sweep", "Spectra or metric eigenvalues along a parameter", cmd_sweep);
    sub->add_option("--axis", o.axis, "xi, zeta or omega")
        ->check(CLI::IsMember({"xi", "zeta", "omega"}));
    sub->add_option("--min", o.min, "First grid value");
    sub->add_option("--max", o.max, "Last grid value");
    sub->add_option("--steps", o.steps, "Grid points");
    sub->add_option("--r", o.r, "n3_general parameter r");
    sub->add_option("--s", o.s, "n3_general parameter s");
  }
  {
    CLI::App* sub = add("critical", "Onset of complex energies in zeta", cmd_critical);
    sub->add_option("--xi-max", o.xi_max, "Upper end of the xi grid");
    sub->add_option("--xi-steps", o.xi_steps, "Points on the xi grid");
    sub->add_option("--zeta-tol", o.zeta_tol, "Bisection bracket width");
  }
  add("continuum", "Hard-wall lattice against the continuum well", cmd_continuum)
      ->add_option("--m", o.m_values, "Half-sizes M (lattice of 2M-1 sites)");
  commands.back().first->add_option("--levels", o.levels, "Number of lowest levels");
  add("locus", "Parameter curves with a root at y = +1 or y = -1", cmd_locus)
      ->add_option("--samples", o.samples, "Points per curve");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    o.threads = read_thread_count();
    std::ostringstream buf;
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) handler(o, sub, buf);
    if (o.out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open " + o.out_path + " for writing");
      file << buf.str();
      if (!file) throw UsageError("failed writing " + o.out_path);
    }
    return kSuccess;
  } catch (const SingularParameters& e) {
    err << "error: " << e.what() << '\n';
    return kSingularParameters;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hermitize::cli

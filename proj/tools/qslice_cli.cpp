// Copyright 2026 The qslice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qslice command line front end. Exit codes: 0 pass, 1 numeric failure,
// 2 parse error, 3 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qslice/blaschke.hpp"
#include "qslice/error.hpp"
#include "qslice/json_io.hpp"
#include "qslice/kernels.hpp"
#include "qslice/realize.hpp"
#include "qslice/sspec.hpp"
#include "qslice/verify.hpp"

namespace {

using qslice::Json;

constexpr int kExitPass = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

struct Options {
  int degree = -1;  // -1: per-command default
  int nodes = qslice::kDefaultNodes;
  double center = 0.0;
  double radius = 1.0;
  std::string slice;
  int mu_max = qslice::kDefaultMuMax;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  std::string format = "json";
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Tables are arrays of flat objects; they render as CSV blocks or aligned text.
bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& row) {
           return row.is_object() && std::none_of(row.begin(), row.end(), [](const Json& c) { return c.is_structured(); });
         });
}

void render_table(std::ostream& os, const Json& rows, char sep) {
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? std::string(1, sep) : "") << keys[k];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < keys.size(); ++k) {
      os << (k ? std::string(1, sep) : "") << (row.contains(keys[k]) ? scalar_text(row[keys[k]]) : "");
    }
    os << "\n";
  }
}

void render_flat(std::ostream& os, const Json& doc, const std::string& prefix, char sep) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (is_table(it.value())) {
      os << "\n[" << key << "]\n";
      render_table(os, it.value(), sep);
    } else if (it.value().is_object()) {
      render_flat(os, it.value(), key, sep);
    } else {
      os << key << (sep == ',' ? "," : ": ") << (it.value().is_structured() ? it.value().dump() : scalar_text(it.value()))
         << "\n";
    }
  }
}

void emit(const Json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    render_flat(std::cout, doc, "", format == "csv" ? ',' : '\t');
  }
}

qslice::UnitImaginary parse_slice(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--slice", "expected x1,x2,x3");
    }
  }
  if (v.size() != 3) throw CLI::ValidationError("--slice", "expected x1,x2,x3");
  try {
    return {v[0], v[1], v[2]};
  } catch (const qslice::Error&) {
    throw CLI::ValidationError("--slice", "slice direction must be nonzero");
  }
}

Json check(const std::string& name, double value, double tol) {
  return {{"name", name}, {"value", value}, {"tolerance", tol}, {"pass", value <= tol}};
}

bool all_pass(const Json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["pass"].get<bool>(); });
}

int cmd_spectrum(const std::string& file, const Options& o) {
  const qslice::QMatrix t = qslice::matrix_from_json(qslice::read_json_file(file));
  emit({{"spheres", qslice::spheres_to_json(qslice::right_eigen_spheres(t))}}, o.format);
  return kExitPass;
}

int cmd_sspec(const std::string& file, const Options& o) {
  const qslice::QMatrix t = qslice::matrix_from_json(qslice::read_json_file(file));
  qslice::ContourSpec c;
  c.center = o.center;
  c.radius = o.radius;
  c.nodes = o.nodes;
  if (!o.slice.empty()) c.slice = parse_slice(o.slice);
  qslice::validate(c);
  const qslice::RieszProjector rp = qslice::riesz_projector(t, c);
  const qslice::ProjectorDiagnostics d = qslice::projector_diagnostics(t, rp);
  const double tol = o.tol.value_or(1e-8);
  Json checks = Json::array({check("idempotency", d.idempotency, tol), check("commutation", d.commutation, tol),
                             check("t_part", d.t_part_error, tol)});
  Json doc{{"projector", qslice::matrix_to_json(rp.projector)}};
  try {
    const qslice::SpectralSplit s = qslice::spectral_split(t, c);
    doc["inside"] = qslice::spheres_to_json(s.inside);
    doc["outside"] = qslice::spheres_to_json(s.outside);
    checks.push_back(check("union_mismatch", s.union_matches ? 0.0 : 1.0, 0.0));
  } catch (const qslice::Error& e) {
    if (e.kind() != qslice::ErrorKind::RankDeficiency) throw;
    checks.push_back(check("rank_deficiency", 1.0, 0.0));
  }
  doc["checks"] = checks;
  emit(doc, o.format);
  return all_pass(checks) ? kExitPass : kExitNumeric;
}

int cmd_negsq(const std::string& file, const Options& o) {
  const qslice::SliceSeries s = qslice::series_from_json(qslice::read_json_file(file));
  const int mu = std::min(o.mu_max, s.degree());
  const qslice::NegSquares ns = qslice::neg_squares(qslice::schur_kernel_coeffs(s, mu));
  emit(qslice::neg_squares_to_json(ns), o.format);
  return kExitPass;
}

int cmd_blaschke(const std::string& file, const Options& o) {
  const qslice::BlaschkeSpec spec = qslice::blaschke_spec_from_json(qslice::read_json_file(file));
  const int degree = o.degree < 0 ? qslice::kBlaschkeDegree : o.degree;
  const qslice::BlaschkeProduct bp = qslice::blaschke_product(spec, degree);
  const double tol = o.tol.value_or(1e-8);
  Json zeros = Json::array();
  for (const auto& z : spec.points) {
    const double v = qslice::eval_scalar(bp.series, z.a).norm();
    zeros.push_back({{"kind", "point"}, {"x0", z.a.x0}, {"x1", z.a.x1}, {"x2", z.a.x2}, {"x3", z.a.x3},
                     {"abs_value", v}, {"pass", v <= tol}});
  }
  for (const auto& z : spec.spheres) {
    // Worst value over the three coordinate slices.
    double v = 0.0;
    for (const auto& u : {qslice::UnitImaginary(1, 0, 0), qslice::UnitImaginary(0, 1, 0), qslice::UnitImaginary(0, 0, 1)}) {
      v = std::max(v, qslice::eval_scalar(bp.series, z.sphere.point(u)).norm());
    }
    zeros.push_back({{"kind", "sphere"}, {"x0", z.sphere.re}, {"x1", z.sphere.im_mag}, {"x2", 0.0}, {"x3", 0.0},
                     {"abs_value", v}, {"pass", v <= tol}});
  }
  Json points = Json::array();
  for (const auto& a : bp.factor_points) points.push_back(qslice::quaternion_to_json(a));
  emit({{"series", qslice::series_to_json(bp.series)}, {"factor_points", points}, {"zeros", zeros}}, o.format);
  return all_pass(zeros) ? kExitPass : kExitNumeric;
}

int cmd_realize(const std::string& file, const Options& o) {
  const qslice::Realization in = qslice::realization_from_json(qslice::read_json_file(file));
  const qslice::Realization r = qslice::realize(in.A, in.C, in.sigma);
  const int degree = o.degree < 0 ? qslice::kDefaultDegree : o.degree;
  const Json checks = Json::array({check("stein_residual", qslice::stein_residual(r.A, r.C, r.sigma, r.P), o.tol.value_or(1e-10)),
                                   check("congruence_residual", qslice::congruence_residual(r), o.tol.value_or(1e-8))});
  emit({{"realization", qslice::realization_to_json(r)},
        {"series", qslice::series_to_json(qslice::realization_series(r, degree))},
        {"checks", checks}},
       o.format);
  return all_pass(checks) ? kExitPass : kExitNumeric;
}

int cmd_klfactor(const std::string& file, const Options& o) {
  const qslice::Realization r = qslice::realization_from_json(qslice::read_json_file(file));
  if (r.B.rows() != r.A.rows() || r.D.rows() != r.C.rows()) {
    throw qslice::Error(qslice::ErrorKind::ParseError, "kl-factor needs A, B, C and D");
  }
  const int degree = o.degree < 0 ? o.mu_max : o.degree;
  const qslice::KreinLangerResult kl = qslice::krein_langer_factor(r, degree, o.mu_max);
  const Json checks = Json::array(
      {check("schur_factor_negative_squares", kl.kappa_schur.kappa, 0.0),
       check("kappa_minus_outside_dim", std::abs(kl.kappa_original.kappa - kl.outside_dim), 0.0),
       check("recomposition_error", kl.recomposition_error, o.tol.value_or(1e-8))});
  emit({{"outside_dim", kl.outside_dim},
        {"kappa", qslice::neg_squares_to_json(kl.kappa_original)},
        {"kappa_schur_factor", qslice::neg_squares_to_json(kl.kappa_schur)},
        {"zero_spheres", qslice::spheres_to_json(kl.zero_spheres)},
        {"blaschke_realization", qslice::realization_to_json(kl.blaschke)},
        {"blaschke_series", qslice::series_to_json(kl.blaschke_series)},
        {"schur_series", qslice::series_to_json(kl.schur_series)},
        {"checks", checks}},
       o.format);
  return all_pass(checks) ? kExitPass : kExitNumeric;
}

Json report_json(const qslice::Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check(c.name, c.value, c.tolerance));
  return {{"suite", r.suite}, {"pass", r.passed()}, {"checks", checks}};
}

int cmd_verify(const std::string& suite, const Options& o) {
  qslice::VerifyConfig cfg;
  if (o.degree >= 0) cfg.degree = o.degree;
  cfg.nodes = o.nodes;
  cfg.mu_max = o.mu_max;
  cfg.tol = o.tol;
  cfg.seed = o.seed;
  if (!o.slice.empty()) cfg.slice = parse_slice(o.slice);
  std::vector<qslice::Report> reports;
  if (suite == "all") {
    reports = qslice::run_all(cfg);
  } else {
    reports.push_back(qslice::run_suite(suite, cfg));
  }
  bool pass = true;
  Json doc = Json::object();
  Json list = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.passed();
    list.push_back(report_json(r));
  }
  if (o.format == "json") {
    emit({{"pass", pass}, {"reports", list}}, o.format);
  } else {
    // One table across all suites keeps the CSV rectangular.
    Json rows = Json::array();
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        rows.push_back({{"suite", r.suite}, {"check", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
      }
    }
    emit({{"pass", pass}, {"checks", rows}}, o.format);
  }
  return pass ? kExitPass : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic slice-function toolkit: spectra, Schur kernels, Blaschke products, realizations"};
  app.require_subcommand(1);
  Options o;
  std::string input;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", o.tol, "Replace the pass/fail tolerance");
  };
  auto* spectrum = app.add_subcommand("spectrum", "Right spectrum of a matrix as spheres");
  spectrum->add_option("matrix", input, "Matrix JSON file")->required();
  add_common(spectrum);

  auto* sspec = app.add_subcommand("sspec", "Riesz projector and spectral split along a circle");
  sspec->add_option("matrix", input, "Matrix JSON file")->required();
  sspec->add_option("--center", o.center, "Real circle center");
  sspec->add_option("--radius", o.radius, "Circle radius");
  sspec->add_option("--nodes", o.nodes, "Quadrature nodes");
  sspec->add_option("--slice", o.slice, "Imaginary unit x1,x2,x3");
  add_common(sspec);

  auto* negsq = app.add_subcommand("negsq", "Negative squares of the Schur kernel of a series");
  negsq->add_option("series", input, "Series JSON file")->required();
  negsq->add_option("--mu-max", o.mu_max, "Largest truncation index");
  add_common(negsq);

  auto* blaschke = app.add_subcommand("blaschke", "Blaschke product from zeros, with zero verification");
  blaschke->add_option("spec", input, "Blaschke spec JSON file")->required();
  blaschke->add_option("--degree", o.degree, "Series degree");
  add_common(blaschke);

  auto* realize = app.add_subcommand("realize", "Stein solve and J-unitary completion of (A, C, sigma)");
  realize->add_option("data", input, "JSON with A, C and optional sigma")->required();
  realize->add_option("--degree", o.degree, "Series degree");
  add_common(realize);

  auto* kl = app.add_subcommand("kl-factor", "Split a realization into Blaschke and Schur factors");
  kl->add_option("realization", input, "Realization JSON file")->required();
  kl->add_option("--degree", o.degree, "Series degree (default: mu-max)");
  kl->add_option("--mu-max", o.mu_max, "Largest truncation index");
  add_common(kl);

  auto* verify = app.add_subcommand("verify", "Run a property suite (or 'all')");
  verify->add_option("suite", input, "Suite name")->required();
  verify->add_option("--degree", o.degree, "Series degree for the Blaschke suite");
  verify->add_option("--nodes", o.nodes, "Quadrature nodes");
  verify->add_option("--slice", o.slice, "Imaginary unit x1,x2,x3");
  verify->add_option("--mu-max", o.mu_max, "Largest truncation index");
  verify->add_option("--seed", o.seed, "Random seed");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(input, o);
    if (*sspec) return cmd_sspec(input, o);
    if (*negsq) return cmd_negsq(input, o);
    if (*blaschke) return cmd_blaschke(input, o);
    if (*realize) return cmd_realize(input, o);
    if (*kl) return cmd_klfactor(input, o);
    if (*verify) return cmd_verify(input, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qslice::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case qslice::ErrorKind::ParseError:
        return kExitParse;
      case qslice::ErrorKind::UnknownSuite:
      case qslice::ErrorKind::InvalidSpec:
        return kExitUsage;
      default:
        return kExitNumeric;
    }
  }
  return kExitUsage;
}

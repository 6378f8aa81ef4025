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

#include "qslice/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qslice/error.hpp"

namespace qslice {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json quaternion_to_json(const Quaternion& q) { return Json::array({q.x0, q.x1, q.x2, q.x3}); }

Quaternion quaternion_from_json(const Json& j) {
  return guarded("quaternion", [&] {
    if (j.is_number()) return Quaternion(j.get<double>());
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::ParseError, "quaternion must be [x0, x1, x2, x3]");
    return Quaternion(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
  });
}

Json matrix_to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (const auto& q : m.entries()) entries.push_back(quaternion_to_json(q));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

QMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "matrix must be an object");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows * cols) {
      throw Error(ErrorKind::ParseError, "matrix entry count does not match rows * cols");
    }
    std::vector<Quaternion> entries;
    for (const auto& q : e) entries.push_back(quaternion_from_json(q));
    return QMatrix(rows, cols, std::move(entries));
  });
}

Json series_to_json(const SliceSeries& s) {
  Json coeff = Json::array();
  for (const auto& c : s.coefficients()) coeff.push_back(matrix_to_json(c));
  return {{"shape", {s.rows(), s.cols()}}, {"degree", s.degree()}, {"coeff", coeff}};
}

SliceSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    const auto degree = j.at("degree").get<int>();
    const auto shape = j.at("shape").get<std::vector<std::size_t>>();
    if (shape.size() != 2) throw Error(ErrorKind::ParseError, "series shape must be [N, M]");
    std::vector<QMatrix> coeff;
    for (const auto& c : j.at("coeff")) coeff.push_back(matrix_from_json(c));
    if (static_cast<int>(coeff.size()) != degree + 1) {
      throw Error(ErrorKind::ParseError, "series needs degree + 1 coefficients");
    }
    for (const auto& c : coeff) {
      if (c.rows() != shape[0] || c.cols() != shape[1]) throw Error(ErrorKind::ParseError, "series coefficient shape");
    }
    return SliceSeries(std::move(coeff));
  });
}

Json sphere_to_json(const Sphere& s) { return {{"re", s.re}, {"im_mag", s.im_mag}}; }

Json spheres_to_json(const std::vector<SphereMultiplicity>& s) {
  Json out = Json::array();
  for (const auto& sm : s) {
    out.push_back({{"re", sm.sphere.re}, {"im_mag", sm.sphere.im_mag}, {"multiplicity", sm.multiplicity}});
  }
  return out;
}

Json blaschke_spec_to_json(const BlaschkeSpec& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back({{"a", quaternion_to_json(p.a)}, {"multiplicity", p.multiplicity}});
  Json sph = Json::array();
  for (const auto& z : s.spheres) {
    sph.push_back({{"re", z.sphere.re}, {"im_mag", z.sphere.im_mag}, {"multiplicity", z.multiplicity}});
  }
  return {{"points", pts}, {"spheres", sph}};
}

BlaschkeSpec blaschke_spec_from_json(const Json& j) {
  return guarded("blaschke spec", [&] {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "blaschke spec must be an object");
    BlaschkeSpec s;
    for (const auto& p : j.value("points", Json::array())) {
      s.points.push_back({quaternion_from_json(p.at("a")), p.value("multiplicity", 1)});
    }
    for (const auto& z : j.value("spheres", Json::array())) {
      s.spheres.push_back({Sphere{z.at("re").get<double>(), z.at("im_mag").get<double>()}, z.value("multiplicity", 1)});
    }
    return s;
  });
}

Json realization_to_json(const Realization& r) {
  Json out{{"A", matrix_to_json(r.A)}, {"B", matrix_to_json(r.B)}, {"C", matrix_to_json(r.C)},
           {"D", matrix_to_json(r.D)}, {"sigma", matrix_to_json(r.sigma)}, {"P", matrix_to_json(r.P)}};
  if (r.P.rows() == r.A.rows() && r.sigma.rows() == r.D.rows()) {
    out["certificates"] = {{"stein_residual", stein_residual(r.A, r.C, r.sigma, r.P)},
                           {"congruence_residual", r.A.rows() == 0 ? 0.0 : congruence_residual(r)},
                           {"congruence_residual_dual", congruence_residual_dual(r)}};
  }
  return out;
}

Realization realization_from_json(const Json& j) {
  return guarded("realization", [&] {
    Realization r;
    r.A = matrix_from_json(j.at("A"));
    r.C = matrix_from_json(j.at("C"));
    r.sigma = j.contains("sigma") ? matrix_from_json(j.at("sigma")) : QMatrix::identity(r.C.rows());
    if (j.contains("B")) r.B = matrix_from_json(j.at("B"));
    if (j.contains("D")) r.D = matrix_from_json(j.at("D"));
    if (j.contains("P")) r.P = matrix_from_json(j.at("P"));
    if (r.A.rows() != r.A.cols() || r.C.cols() != r.A.rows() || r.sigma.rows() != r.C.rows()) {
      throw Error(ErrorKind::ParseError, "realization matrices have inconsistent shapes");
    }
    return r;
  });
}

Json neg_squares_to_json(const NegSquares& n) {
  Json table = Json::array();
  for (const auto& row : n.table) {
    table.push_back({{"mu", row.mu}, {"negatives", row.negative}, {"zeros", row.zero}, {"positives", row.positive}});
  }
  return {{"kappa", n.kappa}, {"stabilized", n.stabilized}, {"table", table}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace qslice

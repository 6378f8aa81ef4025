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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qslice/error.hpp"
#include "qslice/json_io.hpp"
#include "qslice/random.hpp"

using qslice::Json;
using qslice::QMatrix;
using qslice::Quaternion;

namespace {

bool is_parse_error(auto&& fn) {
  try {
    fn();
  } catch (const qslice::Error& e) {
    return e.kind() == qslice::ErrorKind::ParseError;
  }
  return false;
}

}  // namespace

TEST_CASE("quaternion round trip is exact") {
  qslice::gen::Rng rng(70);
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = qslice::gen::quaternion(rng);
    const Json j = Json::parse(qslice::quaternion_to_json(q).dump());
    CHECK(qslice::quaternion_from_json(j) == q);
  }
  CHECK(qslice::quaternion_from_json(Json(2.5)) == Quaternion(2.5));
}

TEST_CASE("matrix and series round trips are exact") {
  qslice::gen::Rng rng(71);
  const QMatrix m = qslice::gen::matrix(rng, 2, 3);
  CHECK(qslice::matrix_from_json(Json::parse(qslice::matrix_to_json(m).dump())) == m);
  const auto s = qslice::gen::matrix_series(rng, 2, 2, 5);
  CHECK(qslice::series_from_json(Json::parse(qslice::series_to_json(s).dump())) == s);
}

TEST_CASE("Blaschke spec round trip") {
  qslice::BlaschkeSpec spec;
  spec.points = {{Quaternion(0.1, 0.2, 0.3, 0.0), 2}};
  spec.spheres = {{qslice::Sphere{0.1, 0.4}, 1}};
  const auto back = qslice::blaschke_spec_from_json(Json::parse(qslice::blaschke_spec_to_json(spec).dump()));
  REQUIRE(back.points.size() == 1);
  CHECK(back.points[0].a == spec.points[0].a);
  CHECK(back.points[0].multiplicity == 2);
  REQUIRE(back.spheres.size() == 1);
  CHECK(back.spheres[0].sphere == spec.spheres[0].sphere);
}

TEST_CASE("realization round trip and defaults") {
  qslice::gen::Rng rng(72);
  qslice::Realization r{qslice::gen::matrix(rng, 2, 2), qslice::gen::matrix(rng, 2, 1), qslice::gen::matrix(rng, 1, 2),
                        qslice::gen::matrix(rng, 1, 1), QMatrix{{1.0}}, qslice::gen::matrix(rng, 2, 2)};
  const auto back = qslice::realization_from_json(Json::parse(qslice::realization_to_json(r).dump()));
  CHECK(back.A == r.A);
  CHECK(back.B == r.B);
  CHECK(back.C == r.C);
  CHECK(back.D == r.D);
  CHECK(back.P == r.P);

  const Json minimal = Json::parse(R"({"A": {"rows": 1, "cols": 1, "entries": [[0.5, 0, 0, 0]]},
                                        "C": {"rows": 1, "cols": 1, "entries": [[1, 0, 0, 0]]}})");
  const auto mr = qslice::realization_from_json(minimal);
  CHECK(mr.sigma == QMatrix{{1.0}});
}

TEST_CASE("malformed input is a parse error") {
  CHECK(is_parse_error([] { (void)qslice::parse_json_text("{not json"); }));
  CHECK(is_parse_error([] { (void)qslice::matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [[1, 0, 0, 0]]})")); }));
  CHECK(is_parse_error([] { (void)qslice::quaternion_from_json(Json::parse("[1, 2, 3]")); }));
  CHECK(is_parse_error([] { (void)qslice::read_json_file("/nonexistent/file.json"); }));
}

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

#pragma once

#include <string>

#include "json.hpp"
#include "qslice/blaschke.hpp"
#include "qslice/kernels.hpp"
#include "qslice/qmatrix.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/realize.hpp"
#include "qslice/series.hpp"

namespace qslice {

using Json = nlohmann::ordered_json;

// Text formats. Doubles are written with 17 significant digits so that a
// write/read cycle is exact. Readers throw Error(ParseError) on malformed input.
//   quaternion:  [x0, x1, x2, x3]
//   matrix:      {"rows": n, "cols": m, "entries": [quaternion, ...]}  (row-major)
//   series:      {"shape": [N, M], "degree": d, "coeff": [matrix, ...]}
//   sphere:      {"re": x, "im_mag": y}
//   blaschke:    {"points": [{"a": quaternion, "multiplicity": k}],
//                 "spheres": [{"re": x, "im_mag": y, "multiplicity": k}]}
//   realization: {"A", "B", "C", "D", "sigma", "P": matrix, "certificates": {...}}

Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

Json series_to_json(const SliceSeries& s);
SliceSeries series_from_json(const Json& j);

Json sphere_to_json(const Sphere& s);
Json spheres_to_json(const std::vector<SphereMultiplicity>& s);

Json blaschke_spec_to_json(const BlaschkeSpec& s);
BlaschkeSpec blaschke_spec_from_json(const Json& j);

/// Includes stein and congruence certificates when P is present.
Json realization_to_json(const Realization& r);
/// Requires A and C; sigma defaults to I; B, D and P are optional.
Realization realization_from_json(const Json& j);

Json neg_squares_to_json(const NegSquares& n);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace qslice

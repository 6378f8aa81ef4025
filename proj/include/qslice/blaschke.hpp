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

#include <optional>
#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/series.hpp"

namespace qslice {

inline constexpr int kBlaschkeDegree = 48;

struct PointZero {
  Quaternion a;
  int multiplicity = 1;
};

struct SphereZero {
  Sphere sphere;
  int multiplicity = 1;
};

/// Zeros of a finite Blaschke product: isolated points and whole spheres.
struct BlaschkeSpec {
  std::vector<PointZero> points;
  std::vector<SphereZero> spheres;
};

/// Throws InvalidModulus for zeros outside 0 < |a| < 1 and InvalidSpec for
/// non-positive multiplicities, non-real-free sphere zeros or repeated entries.
void validate(const BlaschkeSpec& spec);

/// B_a(p) = (1 - p conj(a))^{-*} * (a - p) conj(a)/|a| as a truncated series.
SliceSeries blaschke_point(const Quaternion& a, int degree = kBlaschkeDegree);

/// Exact rational value of B_a at p, used as an oracle for the series.
Quaternion blaschke_point_rational(const Quaternion& a, const Quaternion& p);

/// B_[c](p) = (1 - 2 Re(c) p + |c|^2 p^2)^{-1} (|c|^2 - 2 Re(c) p + p^2); real coefficients.
SliceSeries blaschke_sphere(const Sphere& c, int degree = kBlaschkeDegree);

/// Bound on sup_{|p|=1} |B_a(p) - truncation|: (1 + |a|) |a|^degree.
double blaschke_point_tail_bound(const Quaternion& a, int degree);

struct BlaschkeProduct {
  SliceSeries series;
  std::vector<Quaternion> factor_points;  // a'_j per point factor, one entry per multiplicity
  std::vector<Sphere> factor_spheres;     // one entry per multiplicity
};

/// Sphere factors first, then point factors in order, each point replaced by
/// a'_j = l^{-1} a_j l with l the partial product evaluated at a_j so that the
/// product vanishes at a_j. Throws DegenerateChoice when l vanishes.
BlaschkeProduct blaschke_product(const BlaschkeSpec& spec, int degree = kBlaschkeDegree);

/// Reciprocal of a single Blaschke factor with the metadata needed to use it safely.
/// The series converges on |p| < validity_radius.
struct BlaschkeReciprocal {
  SliceSeries series;
  std::vector<Sphere> pole_spheres;  // poles of the reciprocal inside the unit ball
  std::optional<Quaternion> zero_point;
  std::optional<Sphere> zero_sphere;
  double validity_radius = 0.0;
};

BlaschkeReciprocal blaschke_point_reciprocal(const Quaternion& a, int degree = kBlaschkeDegree);
BlaschkeReciprocal blaschke_sphere_reciprocal(const Sphere& c, int degree = kBlaschkeDegree);

/// Exact rational value of B_a^{-*} at p; throws OnPoleSphere on the sphere [a].
Quaternion blaschke_point_reciprocal_rational(const Quaternion& a, const Quaternion& p);

}  // namespace qslice

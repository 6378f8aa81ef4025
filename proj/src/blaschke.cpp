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

#include "qslice/blaschke.hpp"

#include <cmath>

#include "qslice/error.hpp"

namespace qslice {

namespace {

void check_modulus(double m, const char* what) {
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::InvalidModulus, std::string(what) + " must satisfy 0 < |a| < 1");
}

// Coefficients of sum p^n conj(a)^n up to degree.
SliceSeries geometric(const Quaternion& ac, int degree) {
  std::vector<Quaternion> c{Quaternion(1.0)};
  for (int n = 1; n <= degree; ++n) c.push_back(c.back() * ac);
  return SliceSeries::scalar_polynomial(std::move(c), degree);
}

}  // namespace

void validate(const BlaschkeSpec& spec) {
  for (const auto& z : spec.points) {
    check_modulus(z.a.norm(), "point zero");
    if (z.multiplicity < 1) throw Error(ErrorKind::InvalidSpec, "multiplicity must be positive");
  }
  for (const auto& z : spec.spheres) {
    check_modulus(z.sphere.modulus(), "sphere zero");
    if (z.multiplicity < 1) throw Error(ErrorKind::InvalidSpec, "multiplicity must be positive");
    if (z.sphere.im_mag <= 0.0) throw Error(ErrorKind::InvalidSpec, "sphere zeros must be non-real");
  }
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.points.size(); ++j) {
      if ((spec.points[i].a - spec.points[j].a).norm() <= 1e-12) {
        throw Error(ErrorKind::InvalidSpec, "repeated point zero; use multiplicity instead");
      }
    }
  }
  for (std::size_t i = 0; i < spec.spheres.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.spheres.size(); ++j) {
      if (same_sphere(spec.spheres[i].sphere, spec.spheres[j].sphere, 1e-12)) {
        throw Error(ErrorKind::InvalidSpec, "repeated sphere zero; use multiplicity instead");
      }
    }
  }
}

SliceSeries blaschke_point(const Quaternion& a, int degree) {
  check_modulus(a.norm(), "point zero");
  const Quaternion ac = a.conj();
  const SliceSeries lin = SliceSeries::scalar_polynomial({a, Quaternion(-1.0)}, degree);
  return star_mul(geometric(ac, degree), lin) * (ac / a.norm());
}

Quaternion blaschke_point_rational(const Quaternion& a, const Quaternion& p) {
  // (1 - p conj(a))^{-*} * (a - p) = den(p)^{-1} (1 - p a) * (a - p), den real-coefficient.
  const double na2 = a.norm2();
  const Quaternion den = Quaternion(1.0) - 2.0 * a.re() * p + na2 * (p * p);
  const Quaternion num = a - p * (Quaternion(1.0) + a * a) + (p * p) * a;
  return inverse(den) * num * (a.conj() / a.norm());
}

SliceSeries blaschke_sphere(const Sphere& c, int degree) {
  check_modulus(c.modulus(), "sphere zero");
  const double r = c.modulus() * c.modulus();
  const double x = c.re;
  const std::vector<double> den{1.0, -2.0 * x, r};
  const std::vector<double> inv = real_series_reciprocal(den, degree);
  const std::vector<double> num{r, -2.0 * x, 1.0};
  std::vector<Quaternion> out;
  for (int n = 0; n <= degree; ++n) {
    double acc = 0.0;
    for (int k = 0; k <= std::min(n, 2); ++k) acc += num[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
    out.emplace_back(acc);
  }
  return SliceSeries::scalar_polynomial(std::move(out), degree);
}

double blaschke_point_tail_bound(const Quaternion& a, int degree) {
  return (1.0 + a.norm()) * std::pow(a.norm(), degree);
}

BlaschkeProduct blaschke_product(const BlaschkeSpec& spec, int degree) {
  validate(spec);
  BlaschkeProduct out{SliceSeries::scalar_constant(1.0, degree), {}, {}};
  for (const auto& z : spec.spheres) {
    const SliceSeries f = blaschke_sphere(z.sphere, degree);
    for (int k = 0; k < z.multiplicity; ++k) {
      out.series = star_mul(out.series, f);
      out.factor_spheres.push_back(z.sphere);
    }
  }
  for (const auto& z : spec.points) {
    const Quaternion lambda = eval_scalar(out.series, z.a);
    if (lambda.norm() <= 1e-10) {
      throw Error(ErrorKind::DegenerateChoice, "partial product vanishes at a point zero");
    }
    const Quaternion ap = inverse(lambda) * z.a * lambda;
    const SliceSeries f = blaschke_point(ap, degree);
    for (int k = 0; k < z.multiplicity; ++k) {
      out.series = star_mul(out.series, f);
      out.factor_points.push_back(ap);
    }
  }
  return out;
}

BlaschkeReciprocal blaschke_point_reciprocal(const Quaternion& a, int degree) {
  check_modulus(a.norm(), "point zero");
  BlaschkeReciprocal out;
  out.series = star_inverse(blaschke_point(a, degree));
  out.pole_spheres = {sphere_of(a)};
  out.zero_point = inverse(a.conj());
  out.validity_radius = a.norm();
  return out;
}

BlaschkeReciprocal blaschke_sphere_reciprocal(const Sphere& c, int degree) {
  check_modulus(c.modulus(), "sphere zero");
  BlaschkeReciprocal out;
  // B_[c] has real coefficients, so its reciprocal is the ordinary reciprocal
  // series: numerator and denominator trade places.
  const double r = c.modulus() * c.modulus();
  const double x = c.re;
  const std::vector<double> den{r, -2.0 * x, 1.0};
  const std::vector<double> inv = real_series_reciprocal(den, degree);
  const std::vector<double> num{1.0, -2.0 * x, r};
  std::vector<Quaternion> coeff;
  for (int n = 0; n <= degree; ++n) {
    double acc = 0.0;
    for (int k = 0; k <= std::min(n, 2); ++k) acc += num[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
    coeff.emplace_back(acc);
  }
  out.series = SliceSeries::scalar_polynomial(std::move(coeff), degree);
  out.pole_spheres = {c};
  const double m = c.modulus();
  out.zero_sphere = Sphere{c.re / (m * m), c.im_mag / (m * m)};
  out.validity_radius = m;
  return out;
}

Quaternion blaschke_point_reciprocal_rational(const Quaternion& a, const Quaternion& p) {
  // (a/|a|) * (|a|^2 - 2 Re(a) p + p^2)^{-1} [conj(a) - p (conj(a)^2 + 1) + p^2 conj(a)].
  const Quaternion ac = a.conj();
  const Quaternion den = a.norm2() - 2.0 * a.re() * p + p * p;
  if (den.norm() <= 1e-14 * (1.0 + p.norm2())) throw Error(ErrorKind::OnPoleSphere, "p lies on the pole sphere");
  // The unit constant a/|a| multiplies the polynomial coefficients from the left.
  const Quaternion u = a / a.norm();
  const Quaternion num = u * ac - p * (u * (ac * ac + 1.0)) + (p * p) * (u * ac);
  return inverse(den) * num;
}

}  // namespace qslice

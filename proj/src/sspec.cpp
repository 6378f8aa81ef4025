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

#include "qslice/sspec.hpp"

#include <cmath>
#include <numbers>

#include "qslice/error.hpp"

namespace qslice {

namespace {

// Projector singular values are >= 1 or ~0; this separates them.
constexpr double kProjectorRankTol = 1e-7;

QMatrix shifted(const QMatrix& t, const Quaternion& s) {
  QMatrix out = t;
  const Quaternion sc = s.conj();
  for (std::size_t k = 0; k < t.rows(); ++k) out(k, k) -= sc;
  return out;
}

QMatrix char_inverse_times(const QMatrix& t, const Quaternion& s, const QMatrix& rhs) {
  try {
    return solve(char_operator(t, s), rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::OnSpectrum, "s lies on the S-spectrum of T");
    throw;
  }
}

void check_contour_clear(const QMatrix& t, const ContourSpec& c) {
  for (const auto& sm : right_eigen_spheres(t)) {
    const double dist = std::abs(std::hypot(sm.sphere.re - c.center, sm.sphere.im_mag) - c.radius);
    if (dist <= c.radius * 1e-6) {
      throw Error(ErrorKind::ContourOnSpectrum, "a spectral sphere meets the contour circle");
    }
  }
}

std::size_t projector_rank(const QMatrix& p) {
  std::size_t r = 0;
  for (double s : singular_values(p))
    if (s > kProjectorRankTol) ++r;
  return r;
}

}  // namespace

void validate(const ContourSpec& c) {
  if (!(c.radius > 0.0)) throw Error(ErrorKind::InvalidSpec, "contour radius must be positive");
  if (c.nodes < 16 || c.nodes % 2 != 0) throw Error(ErrorKind::InvalidSpec, "contour nodes must be even and >= 16");
}

QMatrix s_resolvent_left(const Quaternion& s, const QMatrix& t) {
  return -char_inverse_times(t, s, shifted(t, s));
}

QMatrix s_resolvent_right(const Quaternion& s, const QMatrix& t) {
  // Q_s(T) has real scalar coefficients, so it commutes with T - conj(s) I.
  return -(shifted(t, s) * char_inverse_times(t, s, QMatrix::identity(t.rows())));
}

ResidualPair resolvent_eq_residuals(const Quaternion& s, const QMatrix& t) {
  const QMatrix id = QMatrix::identity(t.rows());
  const QMatrix sl = s_resolvent_left(s, t);
  const QMatrix sr = s_resolvent_right(s, t);
  return {norm(sl * s - t * sl - id), norm(s * sr - sr * t - id)};
}

RieszProjector riesz_projector(const QMatrix& t, const ContourSpec& c) {
  validate(c);
  if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "riesz_projector needs a square matrix");
  check_contour_clear(t, c);
  const std::size_t n = t.rows();
  RieszProjector out{QMatrix(n, n), QMatrix(n, n)};
  const double weight = c.radius / c.nodes;
  for (int k = 0; k < c.nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / c.nodes;
    const Quaternion e = slice_exp(c.slice.q(), theta);
    const Quaternion s = Quaternion(c.center) + e * c.radius;
    const QMatrix term = s_resolvent_left(s, t) * (e * weight);
    out.projector += term;
    out.t_part += term * s;
  }
  return out;
}

ProjectorDiagnostics projector_diagnostics(const QMatrix& t, const RieszProjector& rp) {
  const QMatrix& p = rp.projector;
  return {norm(p * p - p), norm(t * p - p * t), norm(rp.t_part - t * p)};
}

ResidualPair projector_resolvent_identities(const QMatrix& t, const RieszProjector& rp, const Quaternion& lambda) {
  const QMatrix sl = s_resolvent_left(lambda, t);
  const QMatrix sr = s_resolvent_right(lambda, t);
  const QMatrix& p = rp.projector;
  const QMatrix& tp = rp.t_part;
  return {norm(p * sl * lambda - tp * sl - p), norm(lambda * sr * p - sr * tp - p)};
}

ResidualPair projector_resolvent_identities(const QMatrix& t, const ContourSpec& c, const Quaternion& lambda) {
  return projector_resolvent_identities(t, riesz_projector(t, c), lambda);
}

SpectralSplit spectral_split(const QMatrix& t, const ContourSpec& c) {
  const std::size_t n = t.rows();
  const QMatrix p1 = riesz_projector(t, c).projector;
  const QMatrix p2 = QMatrix::identity(n) - p1;
  const std::size_t k1 = projector_rank(p1);
  const std::size_t k2 = projector_rank(p2);
  if (k1 + k2 != n) {
    throw Error(ErrorKind::RankDeficiency, "rank(P1) + rank(P2) != dim; contour under-resolved");
  }
  SpectralSplit out;
  out.basis_inside = orthonormal_basis(p1, 0.0, k1);
  out.basis_outside = orthonormal_basis(p2, 0.0, k2);
  out.t_inside = out.basis_inside.adjoint() * t * out.basis_inside;
  out.t_outside = out.basis_outside.adjoint() * t * out.basis_outside;
  out.inside = right_eigen_spheres(out.t_inside);
  out.outside = right_eigen_spheres(out.t_outside);
  std::vector<SphereMultiplicity> merged = out.inside;
  merged.insert(merged.end(), out.outside.begin(), out.outside.end());
  out.union_matches = same_sphere_lists(merged, right_eigen_spheres(t));
  return out;
}

}  // namespace qslice

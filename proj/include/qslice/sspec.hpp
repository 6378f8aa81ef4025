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

#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// Circle {center + radius * e^{I theta}} in the slice plane C_I, with a real
/// center so that the enclosed region is axially symmetric.
struct ContourSpec {
  double center = 0.0;
  double radius = 1.0;
  UnitImaginary slice = UnitImaginary::i();
  int nodes = 256;
};

inline constexpr int kDefaultNodes = 256;

/// Throws InvalidSpec for radius <= 0, nodes < 16 or odd node counts.
void validate(const ContourSpec& c);

/// Left S-resolvent -Q_s(T)^{-1} (T - conj(s) I). Throws OnSpectrum.
QMatrix s_resolvent_left(const Quaternion& s, const QMatrix& t);

/// Right S-resolvent -(T - conj(s) I) Q_s(T)^{-1}. Throws OnSpectrum.
QMatrix s_resolvent_right(const Quaternion& s, const QMatrix& t);

struct ResidualPair {
  double left = 0.0;
  double right = 0.0;
};

/// ||S_L s - T S_L - I|| and ||s S_R - S_R T - I||. Note s acts on the right in the
/// left equation.
ResidualPair resolvent_eq_residuals(const Quaternion& s, const QMatrix& t);

struct RieszProjector {
  QMatrix projector;  // P
  QMatrix t_part;     // T P, computed by the same quadrature with an extra factor s
};

/// Trapezoid rule on the contour: P ~ (r/n) sum S_L(s_k) e^{I theta_k},
/// T_part ~ (r/n) sum S_L(s_k) e^{I theta_k} s_k, theta ascending.
/// Throws ContourOnSpectrum when a spectral sphere meets the circle.
RieszProjector riesz_projector(const QMatrix& t, const ContourSpec& c);

struct ProjectorDiagnostics {
  double idempotency = 0.0;   // ||P^2 - P||
  double commutation = 0.0;   // ||TP - PT||
  double t_part_error = 0.0;  // ||T_part - TP||
};

ProjectorDiagnostics projector_diagnostics(const QMatrix& t, const RieszProjector& rp);

/// Residuals of P S_L(l) l - T_part S_L(l) = P and l S_R(l) P - S_R(l) T_part = P.
ResidualPair projector_resolvent_identities(const QMatrix& t, const RieszProjector& rp, const Quaternion& lambda);
ResidualPair projector_resolvent_identities(const QMatrix& t, const ContourSpec& c, const Quaternion& lambda);

struct SpectralSplit {
  std::vector<SphereMultiplicity> inside;
  std::vector<SphereMultiplicity> outside;
  QMatrix basis_inside;   // orthonormal columns spanning ran(P1)
  QMatrix basis_outside;  // orthonormal columns spanning ran(I - P1)
  QMatrix t_inside;       // restriction of T to ran(P1)
  QMatrix t_outside;
  bool union_matches = false;  // inside + outside equals right_eigen_spheres(T)
};

/// Splits T along the contour. Throws ContourOnSpectrum, RankDeficiency.
SpectralSplit spectral_split(const QMatrix& t, const ContourSpec& c);

}  // namespace qslice

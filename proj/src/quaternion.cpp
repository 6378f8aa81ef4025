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

#include "qslice/quaternion.hpp"

#include <ostream>

#include "qslice/error.hpp"

namespace qslice {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OnSpectrum: return "OnSpectrum";
    case ErrorKind::ContourOnSpectrum: return "ContourOnSpectrum";
    case ErrorKind::RankDeficiency: return "RankDeficiency";
    case ErrorKind::NotInvertibleAtZero: return "NotInvertibleAtZero";
    case ErrorKind::BadSignatureMatrix: return "BadSignatureMatrix";
    case ErrorKind::AlphaNotInvertibleAtZero: return "AlphaNotInvertibleAtZero";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::DegenerateChoice: return "DegenerateChoice";
    case ErrorKind::SteinSingular: return "SteinSingular";
    case ErrorKind::NotObservable: return "NotObservable";
    case ErrorKind::CompletionFailure: return "CompletionFailure";
    case ErrorKind::OnPoleSphere: return "OnPoleSphere";
    case ErrorKind::IMinusASingular: return "IMinusASingular";
    case ErrorKind::BNotInvertibleAtZero: return "BNotInvertibleAtZero";
    case ErrorKind::SpectrumOnUnitSphere: return "SpectrumOnUnitSphere";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Quaternion inverse(const Quaternion& p) {
  const double n2 = p.norm2();
  if (std::sqrt(n2) <= tol_zero(p)) {
    throw Error(ErrorKind::ZeroDivision, "quaternion inverse of zero");
  }
  return p.conj() / n2;
}

Quaternion slice_exp(const Quaternion& unit, double theta) {
  return Quaternion(std::cos(theta)) + unit * std::sin(theta);
}

UnitImaginary::UnitImaginary(double x1, double x2, double x3) {
  const double n = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::ZeroDivision, "imaginary unit must be a nonzero finite vector");
  }
  q_ = {0.0, x1 / n, x2 / n, x3 / n};
}

SliceDecomposition slice_decompose(const Quaternion& p) {
  const double im = p.imag_norm();
  if (im <= tol_zero(p)) {
    return {p.x0, 0.0, std::nullopt};
  }
  return {p.x0, im, UnitImaginary(p.x1, p.x2, p.x3)};
}

Sphere sphere_of(const Quaternion& p) { return {p.x0, p.imag_norm()}; }

bool same_sphere(const Sphere& a, const Sphere& b, double tol) {
  const double scale = 1.0 + std::max(a.modulus(), b.modulus());
  return std::abs(a.re - b.re) <= tol * scale && std::abs(a.im_mag - b.im_mag) <= tol * scale;
}

Quaternion char_poly_value(const Quaternion& s) {
  return s * s - s * (2.0 * s.re()) + Quaternion(s.norm2());
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ")";
}

std::ostream& operator<<(std::ostream& os, const Sphere& s) {
  return os << "[" << s.re << " +/- S*" << s.im_mag << "]";
}

}  // namespace qslice

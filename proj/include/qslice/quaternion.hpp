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

#include <cmath>
#include <complex>
#include <iosfwd>
#include <optional>

namespace qslice {

/// Real quaternion x0 + x1 i + x2 j + x3 k.
///
/// Plain value type; every operation is pure. The complex pair form
/// q = z1 + z2 j with z1 = x0 + x1 i, z2 = x2 + x3 i is what the
/// complex-adjoint embedding in qmatrix.hpp is built on.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : x0(re) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Build from the complex pair (z1, z2) meaning z1 + z2 j.
  static Quaternion from_complex_pair(std::complex<double> z1, std::complex<double> z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  std::complex<double> z1() const { return {x0, x1}; }
  std::complex<double> z2() const { return {x2, x3}; }

  double re() const { return x0; }
  Quaternion imag() const { return {0.0, x1, x2, x3}; }
  double imag_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
  double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion conj() const { return {x0, -x1, -x2, -x3}; }

  Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  Quaternion& operator*=(double s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product; ij = k, jk = i, ki = j.
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
          p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
          p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion conj(const Quaternion& p) { return p.conj(); }
inline double abs(const Quaternion& p) { return p.norm(); }

/// Scale-relative zero threshold: 1e-13 * (1 + |p|).
inline double tol_zero(const Quaternion& p) { return 1e-13 * (1.0 + p.norm()); }

/// conj(p)/|p|^2. Throws Error(ZeroDivision) when |p| <= tol_zero(p).
Quaternion inverse(const Quaternion& p);

/// Exponential restricted to a slice: cos(theta) + unit*sin(theta).
Quaternion slice_exp(const Quaternion& unit, double theta);

/// Purely imaginary unit quaternion; the constructor normalizes and rejects zero input.
class UnitImaginary {
 public:
  UnitImaginary(double x1, double x2, double x3);
  static UnitImaginary i() { return {1.0, 0.0, 0.0}; }

  const Quaternion& q() const { return q_; }
  double x1() const { return q_.x1; }
  double x2() const { return q_.x2; }
  double x3() const { return q_.x3; }

 private:
  Quaternion q_;
};

struct SliceDecomposition {
  double x0;
  double x1;  // |Im p|, >= 0
  std::optional<UnitImaginary> unit;  // empty for real p
};

/// p = x0 + I x1 with x1 = |Im p|; the unit is absent for real p.
SliceDecomposition slice_decompose(const Quaternion& p);

/// The 2-sphere [p] = {x0 + J x1 : J in S}, stored as (re, im_mag).
struct Sphere {
  double re = 0.0;
  double im_mag = 0.0;

  double modulus() const { return std::hypot(re, im_mag); }
  /// Representative re + unit * im_mag.
  Quaternion point(const UnitImaginary& unit = UnitImaginary::i()) const {
    return Quaternion(re) + unit.q() * im_mag;
  }
  bool is_real() const { return im_mag == 0.0; }

  friend constexpr bool operator==(const Sphere&, const Sphere&) = default;
};

Sphere sphere_of(const Quaternion& p);

/// True when the spheres agree within an absolute+relative tolerance.
bool same_sphere(const Sphere& a, const Sphere& b, double tol);

/// s^2 - 2 Re(s) s + |s|^2, identically zero in exact arithmetic.
Quaternion char_poly_value(const Quaternion& s);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Sphere& s);

}  // namespace qslice

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

#include <span>
#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// Whether powers of the variable sit left of the coefficients (sum p^n a_n,
/// left slice hyperholomorphic) or right of them (sum a_n p^n).
enum class SeriesSide { Left, Right };

inline constexpr int kDefaultDegree = 32;

/// Power series truncated at an explicit degree, with N x M matrix coefficients.
///
/// Coefficients past degree() are unknown rather than zero, so every binary
/// operation returns the minimum degree of its operands. Exact polynomials are
/// built with `polynomial`, which pads with genuine zeros up to a requested degree.
class SliceSeries {
 public:
  SliceSeries() = default;
  explicit SliceSeries(std::vector<QMatrix> coeff, SeriesSide side = SeriesSide::Left);

  static SliceSeries polynomial(std::vector<QMatrix> coeff, int degree, SeriesSide side = SeriesSide::Left);
  static SliceSeries scalar_polynomial(std::vector<Quaternion> coeff, int degree);
  static SliceSeries constant(const QMatrix& c, int degree) { return polynomial({c}, degree); }
  static SliceSeries scalar_constant(const Quaternion& c, int degree) { return scalar_polynomial({c}, degree); }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  std::size_t rows() const { return coeff_.empty() ? 0 : coeff_.front().rows(); }
  std::size_t cols() const { return coeff_.empty() ? 0 : coeff_.front().cols(); }
  bool is_scalar() const { return rows() == 1 && cols() == 1; }
  SeriesSide side() const { return side_; }

  const QMatrix& operator[](int n) const { return coeff_[static_cast<std::size_t>(n)]; }
  const std::vector<QMatrix>& coefficients() const { return coeff_; }
  /// Scalar coefficient n of a 1x1 series.
  const Quaternion& scalar(int n) const { return coeff_[static_cast<std::size_t>(n)](0, 0); }

  SliceSeries truncated(int degree) const;

  friend bool operator==(const SliceSeries&, const SliceSeries&) = default;

 private:
  std::vector<QMatrix> coeff_;
  SeriesSide side_ = SeriesSide::Left;
};

SliceSeries operator+(const SliceSeries& f, const SliceSeries& g);
SliceSeries operator-(const SliceSeries& f, const SliceSeries& g);
/// Constant factors, applied to every coefficient.
SliceSeries operator*(const Quaternion& q, const SliceSeries& f);
SliceSeries operator*(const SliceSeries& f, const Quaternion& q);

/// c_n = sum_{r<=n} a_r b_{n-r}; degree min(d_f, d_g). Both operands must share a side.
SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g);

/// f^c: coefficientwise conjugate.
SliceSeries series_conj(const SliceSeries& f);

/// f^s = f^c * f for scalar f; coefficients are real up to rounding.
SliceSeries series_sym(const SliceSeries& f);

/// Slice reciprocal (f^s)^{-1} f^c of a scalar series. Throws NotInvertibleAtZero.
SliceSeries star_inverse(const SliceSeries& f);

/// Two-sided inverse in the formal power series ring by the recursion
/// b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{r>=1} a_r b_{n-r}. Square coefficients.
SliceSeries formal_star_inverse(const SliceSeries& f);

/// Reciprocal of a real-coefficient series as real coefficients.
std::vector<double> real_series_reciprocal(std::span<const double> c, int degree);

/// Horner evaluation honoring the side of the variable.
QMatrix eval(const SliceSeries& f, const Quaternion& p);
/// Shorthand for scalar series.
Quaternion eval_scalar(const SliceSeries& f, const Quaternion& p);

/// Expansion of (I - pA)^{-*}: coefficients A^n up to `degree`.
SliceSeries star_resolvent(const QMatrix& a, int degree);

/// Closed form Q^{-1} - conj(p) (A Q^{-1}) with Q = |p|^2 A^2 - 2 Re(p) A + I; the scalar acts
/// from the left. Throws Singular.
QMatrix star_resolvent_eval(const QMatrix& a, const Quaternion& p);

/// Coefficientwise adjoint; a left series in p becomes a right series in conj(p).
SliceSeries adjoint_series(const SliceSeries& f);

/// Largest coefficient deviation between two series over their common degree.
double max_coeff_diff(const SliceSeries& f, const SliceSeries& g);

}  // namespace qslice

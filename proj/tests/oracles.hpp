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

// Oracles for the unit tests. They avoid the code paths under test: products go
// through the real 4x4 representation instead of the Hamilton formula or the
// complex adjoint, series are summed from explicit powers instead of Horner's
// rule, and transfer functions use classical real/complex linear algebra.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/random.hpp"
#include "qslice/series.hpp"

namespace oracle {

using qslice::QMatrix;
using qslice::Quaternion;
using qslice::SliceSeries;

/// Left multiplication by p acting on (x0, x1, x2, x3).
inline Eigen::Matrix4d left_mult(const Quaternion& p) {
  Eigen::Matrix4d l;
  l << p.x0, -p.x1, -p.x2, -p.x3,
       p.x1, p.x0, -p.x3, p.x2,
       p.x2, p.x3, p.x0, -p.x1,
       p.x3, -p.x2, p.x1, p.x0;
  return l;
}

inline Quaternion mul(const Quaternion& p, const Quaternion& q) {
  const Eigen::Vector4d v = left_mult(p) * Eigen::Vector4d(q.x0, q.x1, q.x2, q.x3);
  return {v(0), v(1), v(2), v(3)};
}

/// Real 4r x 4c representation built from left_mult blocks; multiplicative.
inline Eigen::MatrixXd real_rep(const QMatrix& m) {
  Eigen::MatrixXd out(4 * m.rows(), 4 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.block<4, 4>(4 * r, 4 * c) = left_mult(m(r, c));
  }
  return out;
}

/// Reads quaternion entries back from the first column of each 4x4 block.
inline QMatrix from_real_rep(const Eigen::MatrixXd& x) {
  QMatrix out(static_cast<std::size_t>(x.rows() / 4), static_cast<std::size_t>(x.cols() / 4));
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out(r, c) = {x(4 * r, 4 * c), x(4 * r + 1, 4 * c), x(4 * r + 2, 4 * c), x(4 * r + 3, 4 * c)};
    }
  }
  return out;
}

inline QMatrix matmul(const QMatrix& a, const QMatrix& b) { return from_real_rep(real_rep(a) * real_rep(b)); }

inline Quaternion power(const Quaternion& p, int n) {
  Quaternion acc(1.0);
  for (int k = 0; k < n; ++k) acc = oracle::mul(acc, p);
  return acc;
}

/// sum p^n a_n with explicit powers (left series).
inline QMatrix sum_left(const SliceSeries& f, const Quaternion& p) {
  QMatrix acc(f.rows(), f.cols());
  for (int n = 0; n <= f.degree(); ++n) {
    const Quaternion pn = power(p, n);
    QMatrix term(f.rows(), f.cols());
    for (std::size_t r = 0; r < f.rows(); ++r) {
      for (std::size_t c = 0; c < f.cols(); ++c) term(r, c) = oracle::mul(pn, f[n](r, c));
    }
    acc += term;
  }
  return acc;
}

/// Real matrix to QMatrix.
inline QMatrix from_real(const Eigen::MatrixXd& m) {
  QMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

/// Complex matrix in the slice C_i to QMatrix.
inline QMatrix from_complex(const Eigen::MatrixXcd& m) {
  QMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Quaternion(m(r, c).real(), m(r, c).imag(), 0, 0);
  }
  return out;
}

inline double max_abs_diff(const QMatrix& a, const QMatrix& b) { return (a - b).max_abs(); }

}  // namespace oracle

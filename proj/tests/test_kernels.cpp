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

#include <cmath>

#include "oracles.hpp"
#include "qslice/blaschke.hpp"
#include "qslice/error.hpp"
#include "qslice/kernels.hpp"
#include "qslice/random.hpp"

using qslice::QMatrix;
using qslice::Quaternion;
using qslice::SliceSeries;

namespace {

const QMatrix kOne{{1.0}};
const QMatrix kMinusOne{{-1.0}};

SliceSeries one_negative_square() {
  const Quaternion a(0.5, 0.0, 0.3, 0.0);
  return qslice::star_mul(qslice::blaschke_point_reciprocal(a, 48).series,
                          SliceSeries::scalar_constant(Quaternion(0, 0.4, 0, 0), 48));
}

}  // namespace

TEST_CASE("coefficients of the identity symbol") {
  const auto s = SliceSeries::scalar_polynomial({0.0, 1.0}, 16);
  const auto k = qslice::schur_kernel_coeffs(s, 6);
  CHECK(k(0, 0) == kOne);
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m)
      if (n + m > 0) CHECK(k(n, m).max_abs() == 0.0);
  const auto ns = qslice::neg_squares(k);
  CHECK(ns.kappa == 0);
  CHECK(ns.stabilized);
  CHECK(ns.table.size() == 7);
}

TEST_CASE("coefficients against the explicit convolution") {
  qslice::gen::Rng rng(40);
  const auto s = qslice::gen::matrix_series(rng, 2, 2, 8);
  const QMatrix sigma1 = QMatrix::diag({1.0, -1.0});
  const QMatrix sigma2 = QMatrix::diag({-1.0, 1.0});
  const auto k = qslice::schur_kernel_coeffs(s, sigma1, sigma2, 5);
  CHECK(k.hermitian_defect() < 1e-13);
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      QMatrix want = n == m ? sigma2 : QMatrix(2, 2);
      for (int j = 0; j <= std::min(n, m); ++j)
        want -= oracle::matmul(oracle::matmul(s[n - j], sigma1), s[m - j].adjoint());
      CHECK(oracle::max_abs_diff(k(n, m), want) < 1e-13);
    }
  }
  const QMatrix a2 = k.block_matrix(2);
  CHECK(a2.rows() == 6);
  CHECK(oracle::max_abs_diff(a2.block(2, 4, 2, 2), k(1, 2)) == 0.0);
}

TEST_CASE("kernel values on real points match the rational form") {
  qslice::gen::Rng rng(41);
  const auto s = qslice::gen::scalar_series(rng, 60) * Quaternion(0.3);
  for (int t = 0; t < 10; ++t) {
    const double x = qslice::gen::uniform(rng, -0.5, 0.5);
    const double y = qslice::gen::uniform(rng, -0.5, 0.5);
    const Quaternion sx = qslice::eval_scalar(s, x);
    const Quaternion sy = qslice::eval_scalar(s, y);
    const Quaternion want = (Quaternion(1.0) - sx * sy.conj()) / (1.0 - x * y);
    const QMatrix got = qslice::schur_kernel_eval(s, kOne, kOne, x, y);
    CHECK((got(0, 0) - want).norm() < 1e-12);
  }
}

TEST_CASE("kernel values against the truncated double sum") {
  qslice::gen::Rng rng(42);
  const auto s = qslice::gen::scalar_series(rng, 40) * Quaternion(0.3);
  const auto k = qslice::schur_kernel_coeffs(s, 40);
  const Quaternion p = qslice::gen::in_ball(rng, 0.4);
  const Quaternion q = qslice::gen::in_ball(rng, 0.4);
  Quaternion want;
  for (int n = 0; n <= 40; ++n)
    for (int m = 0; m <= 40; ++m) want += oracle::power(p, n) * k(n, m)(0, 0) * oracle::power(q.conj(), m);
  CHECK((qslice::schur_kernel_eval(s, kOne, kOne, p, q)(0, 0) - want).norm() < 1e-10);
}

TEST_CASE("coefficients recovered by quadrature") {
  qslice::gen::Rng rng(43);
  const auto s = qslice::gen::matrix_series(rng, 2, 2, 10);
  const QMatrix sigma = QMatrix::identity(2);
  const auto direct = qslice::schur_kernel_coeffs(s, sigma, sigma, 4);
  const auto quad = qslice::kernel_coeffs_by_quadrature(s, sigma, sigma, 4, 0.5, 64);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(oracle::max_abs_diff(direct(n, m), quad(n, m)) < 1e-9);
}

TEST_CASE("negative squares of simple symbols") {
  // A constant of modulus two: every diagonal coefficient is 1 - 4.
  const auto big = qslice::schur_kernel_coeffs(SliceSeries::scalar_constant(Quaternion(0, 2, 0, 0), 16), 8);
  CHECK(big(3, 3)(0, 0) == Quaternion(-3.0));
  auto ns = qslice::neg_squares(big);
  CHECK(ns.kappa == 9);
  CHECK_FALSE(ns.stabilized);

  // One reciprocal Blaschke factor times a contractive constant: one negative square.
  ns = qslice::neg_squares(qslice::schur_kernel_coeffs(one_negative_square(), 10));
  CHECK(ns.kappa == 1);
  CHECK(ns.stabilized);

  // sigma2 = -1 with a zero symbol: every truncation gains a negative square.
  const auto neg = qslice::schur_kernel_coeffs(SliceSeries::scalar_constant(0.0, 16), kOne, kMinusOne, 8);
  ns = qslice::neg_squares(neg);
  CHECK_FALSE(ns.stabilized);
  CHECK(ns.table.back().negative == 9);

  // A Schur function has none.
  const auto small = qslice::schur_kernel_coeffs(SliceSeries::scalar_constant(Quaternion(0.5, 0, 0.5, 0), 16), 8);
  CHECK(qslice::neg_squares(small).kappa == 0);
}

TEST_CASE("inertia counts") {
  const auto row = qslice::inertia(QMatrix::diag({2.0, -1.0, 0.0, -5.0}));
  CHECK(row.positive == 1);
  CHECK(row.negative == 2);
  CHECK(row.zero == 1);
  CHECK_THROWS_AS(qslice::inertia(QMatrix{{0.0, 1.0}, {0.0, 0.0}}), qslice::Error);
}

TEST_CASE("signature matrices are validated") {
  const auto s = SliceSeries::scalar_constant(0.5, 4);
  try {
    (void)qslice::schur_kernel_coeffs(s, QMatrix{{2.0}}, kOne, 3);
    FAIL("expected BadSignatureMatrix");
  } catch (const qslice::Error& e) {
    CHECK(e.kind() == qslice::ErrorKind::BadSignatureMatrix);
  }
  CHECK_THROWS_AS(qslice::schur_kernel_coeffs(s, QMatrix{{Quaternion::i()}}, kOne, 3), qslice::Error);
}

TEST_CASE("lower block Toeplitz layout") {
  const auto alpha = SliceSeries::scalar_polynomial({1.0, Quaternion::i(), 2.0}, 4);
  const QMatrix l = qslice::lower_block_toeplitz(alpha, 2);
  const QMatrix want{{1.0, 0.0, 0.0}, {Quaternion::i(), 1.0, 0.0}, {2.0, Quaternion::i(), 1.0}};
  CHECK(l == want);
}

TEST_CASE("congruence by an invertible symbol preserves the negative count") {
  const auto k = qslice::schur_kernel_coeffs(one_negative_square(), 8);
  const auto alpha = SliceSeries::scalar_polynomial({1.0, Quaternion::i()}, 48);
  const auto cc = qslice::congruence_check(k, alpha, 8);
  CHECK(cc.kappa_equal);
  CHECK(cc.original.kappa == 1);
  CHECK(cc.transformed.kappa == 1);

  qslice::gen::Rng rng(44);
  for (int t = 0; t < 5; ++t) {
    const auto sr = qslice::gen::matrix_series(rng, 2, 2, 12);
    const auto kr = qslice::schur_kernel_coeffs(sr, QMatrix::identity(2), QMatrix::identity(2), 6);
    const auto ar = qslice::gen::matrix_series(rng, 2, 2, 12) + SliceSeries::constant(3.0 * QMatrix::identity(2), 12);
    CHECK(qslice::congruence_check(kr, ar, 6).kappa_equal);
  }
}

TEST_CASE("congruence rejects a singular constant term") {
  const auto k = qslice::schur_kernel_coeffs(SliceSeries::scalar_constant(0.5, 8), 4);
  const auto alpha = SliceSeries::scalar_polynomial({0.0, 1.0}, 8);
  try {
    (void)qslice::congruence_check(k, alpha, 4);
    FAIL("expected AlphaNotInvertibleAtZero");
  } catch (const qslice::Error& e) {
    CHECK(e.kind() == qslice::ErrorKind::AlphaNotInvertibleAtZero);
  }
}

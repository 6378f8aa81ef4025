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
#include "qslice/error.hpp"
#include "qslice/random.hpp"
#include "qslice/series.hpp"

using qslice::QMatrix;
using qslice::Quaternion;
using qslice::SliceSeries;

namespace {

const Quaternion kI = Quaternion::i();
const Quaternion kJ = Quaternion::j();
const Quaternion kK = Quaternion::k();

}  // namespace

TEST_CASE("star product of two linear polynomials") {
  const auto f = SliceSeries::scalar_polynomial({1.0, kI}, 4);
  const auto g = SliceSeries::scalar_polynomial({1.0, kJ}, 4);
  const auto fg = qslice::star_mul(f, g);
  CHECK(fg.scalar(0) == Quaternion(1.0));
  CHECK(fg.scalar(1) == kI + kJ);
  CHECK(fg.scalar(2) == kK);
  CHECK(fg.scalar(3) == Quaternion());
  CHECK(qslice::star_mul(g, f).scalar(2) == -kK);
}

TEST_CASE("star product degree is the smaller one") {
  const auto f = SliceSeries::scalar_polynomial({1.0}, 3);
  const auto g = SliceSeries::scalar_polynomial({1.0}, 7);
  CHECK(qslice::star_mul(f, g).degree() == 3);
}

TEST_CASE("star product against coefficient convolution oracle") {
  qslice::gen::Rng rng(30);
  const auto f = qslice::gen::matrix_series(rng, 2, 3, 6);
  const auto g = qslice::gen::matrix_series(rng, 3, 2, 6);
  const auto fg = qslice::star_mul(f, g);
  for (int n = 0; n <= 6; ++n) {
    QMatrix want(2, 2);
    for (int k = 0; k <= n; ++k) want += oracle::matmul(f[k], g[n - k]);
    CHECK(oracle::max_abs_diff(fg[n], want) < 1e-13);
  }
}

TEST_CASE("star product is associative") {
  qslice::gen::Rng rng(31);
  const auto f = qslice::gen::scalar_series(rng, 10);
  const auto g = qslice::gen::scalar_series(rng, 10);
  const auto h = qslice::gen::scalar_series(rng, 10);
  CHECK(qslice::max_coeff_diff(qslice::star_mul(qslice::star_mul(f, g), h),
                               qslice::star_mul(f, qslice::star_mul(g, h))) < 1e-12);
}

TEST_CASE("conjugate and symmetrization of 1 - p conj(a)") {
  const Quaternion a(0.3, 0.2, -0.4, 0.1);
  const auto f = SliceSeries::scalar_polynomial({1.0, -a.conj()}, 8);
  const auto fs = qslice::series_sym(f);
  CHECK((fs.scalar(0) - 1.0).norm() < 1e-15);
  CHECK((fs.scalar(1) - Quaternion(-2 * a.re())).norm() < 1e-15);
  CHECK((fs.scalar(2) - Quaternion(a.norm2())).norm() < 1e-15);
  for (int n = 3; n <= 8; ++n) CHECK(fs.scalar(n).norm() == 0.0);
  CHECK(qslice::series_conj(f).scalar(1) == -a);
}

TEST_CASE("star inverse of 1 - p conj(a) is the geometric series") {
  const Quaternion a(0.3, 0.2, -0.4, 0.1);
  const auto f = SliceSeries::scalar_polynomial({1.0, -a.conj()}, 12);
  const auto inv = qslice::star_inverse(f);
  for (int n = 0; n <= 12; ++n) CHECK((inv.scalar(n) - oracle::power(a.conj(), n)).norm() < 1e-14);
  const auto finv = qslice::formal_star_inverse(f);
  CHECK(qslice::max_coeff_diff(inv, finv) < 1e-14);
}

TEST_CASE("star inverse on random series, both constructions") {
  qslice::gen::Rng rng(32);
  for (int n = 0; n < 20; ++n) {
    const auto f = qslice::gen::scalar_series(rng, 16);
    const auto one = SliceSeries::scalar_constant(1.0, 16);
    const auto inv = qslice::star_inverse(f);
    CHECK(qslice::max_coeff_diff(qslice::star_mul(f, inv), one) < 1e-11);
    CHECK(qslice::max_coeff_diff(qslice::star_mul(inv, f), one) < 1e-11);
    CHECK(qslice::max_coeff_diff(inv, qslice::formal_star_inverse(f)) < 1e-11);
  }
}

TEST_CASE("star inverse requires an invertible constant term") {
  const auto f = SliceSeries::scalar_polynomial({0.0, 1.0}, 4);
  try {
    (void)qslice::star_inverse(f);
    FAIL("expected NotInvertibleAtZero");
  } catch (const qslice::Error& e) {
    CHECK(e.kind() == qslice::ErrorKind::NotInvertibleAtZero);
  }
  CHECK_THROWS_AS(qslice::formal_star_inverse(f), qslice::Error);
}

TEST_CASE("real reciprocal") {
  const std::vector<double> c{1.0, -1.0};
  const auto r = qslice::real_series_reciprocal(c, 6);
  for (double x : r) CHECK(x == 1.0);
}

TEST_CASE("evaluation") {
  const auto geo = SliceSeries::scalar_polynomial(std::vector<Quaternion>(41, 1.0), 40);
  CHECK(qslice::eval_scalar(geo, 0.5).re() == doctest::Approx(2.0).epsilon(1e-11));

  qslice::gen::Rng rng(33);
  const auto f = qslice::gen::matrix_series(rng, 2, 2, 10);
  const Quaternion p = qslice::gen::in_ball(rng, 0.8);
  CHECK(oracle::max_abs_diff(qslice::eval(f, p), oracle::sum_left(f, p)) < 1e-13);

  const auto fr = qslice::adjoint_series(f);
  CHECK(fr.side() == qslice::SeriesSide::Right);
  QMatrix want(2, 2);
  for (int n = 0; n <= 10; ++n) want += fr[n] * oracle::power(p, n);
  CHECK(oracle::max_abs_diff(qslice::eval(fr, p), want) < 1e-13);
}

TEST_CASE("evaluation is multiplicative only for the star product on a real variable") {
  const auto f = SliceSeries::scalar_polynomial({1.0, kI}, 4);
  const auto g = SliceSeries::scalar_polynomial({1.0, kJ}, 4);
  const auto fg = qslice::star_mul(f, g);
  const double x = 0.4;
  CHECK((qslice::eval_scalar(fg, x) - qslice::eval_scalar(f, x) * qslice::eval_scalar(g, x)).norm() < 1e-15);
  // On a non-real point the pointwise product is not the star product.
  const Quaternion p(0, 0, 0, 0.5);
  CHECK((qslice::eval_scalar(fg, p) - qslice::eval_scalar(f, p) * qslice::eval_scalar(g, p)).norm() > 1e-3);
}

TEST_CASE("star resolvent series and closed form") {
  const QMatrix a{{kJ}};
  const Quaternion p(0, 0.5, 0, 0);
  const QMatrix series_value = qslice::eval(qslice::star_resolvent(a, 40), p);
  CHECK(oracle::max_abs_diff(qslice::star_resolvent_eval(a, p), series_value) < 1e-10);

  qslice::gen::Rng rng(34);
  for (int n = 0; n < 10; ++n) {
    const QMatrix m = qslice::gen::matrix_with_norm(rng, 3, 3, 0.6);
    const Quaternion q = qslice::gen::in_ball(rng, 0.9);
    CHECK(oracle::max_abs_diff(qslice::star_resolvent_eval(m, q), qslice::eval(qslice::star_resolvent(m, 120), q)) <
          1e-10);
  }
}

TEST_CASE("adjoint reverses star products") {
  qslice::gen::Rng rng(35);
  const auto f = qslice::gen::matrix_series(rng, 2, 3, 8);
  const auto g = qslice::gen::matrix_series(rng, 3, 2, 8);
  const auto lhs = qslice::adjoint_series(qslice::star_mul(f, g));
  const auto rhs = qslice::star_mul(qslice::adjoint_series(g), qslice::adjoint_series(f));
  CHECK(qslice::max_coeff_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("arithmetic and scalar actions") {
  const auto f = SliceSeries::scalar_polynomial({1.0, kJ}, 3);
  CHECK((kI * f).scalar(1) == kK);
  CHECK((f * kI).scalar(1) == -kK);
  CHECK(qslice::max_coeff_diff(f - f, SliceSeries::scalar_constant(0.0, 3)) == 0.0);
  CHECK((f + f).scalar(1) == 2.0 * kJ);
  CHECK(f.truncated(1).degree() == 1);
}

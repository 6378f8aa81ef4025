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
#include "qslice/qmatrix.hpp"
#include "qslice/random.hpp"

using qslice::QMatrix;
using qslice::Quaternion;

TEST_CASE("matrix product matches the real representation oracle") {
  qslice::gen::Rng rng(10);
  for (int n = 0; n < 20; ++n) {
    const QMatrix a = qslice::gen::matrix(rng, 3, 4);
    const QMatrix b = qslice::gen::matrix(rng, 4, 2);
    CHECK(oracle::max_abs_diff(a * b, oracle::matmul(a, b)) <= 1e-13);
  }
}

TEST_CASE("left and right scalar actions differ") {
  const QMatrix m{{Quaternion::j()}};
  CHECK((Quaternion::i() * m)(0, 0) == Quaternion::k());
  CHECK((m * Quaternion::i())(0, 0) == -Quaternion::k());
}

TEST_CASE("complex adjoint") {
  const QMatrix j{{Quaternion::j()}};
  const qslice::CMatrix cj = qslice::complex_adjoint(j);
  CHECK(cj(0, 0) == std::complex<double>(0, 0));
  CHECK(cj(0, 1) == std::complex<double>(1, 0));
  CHECK(cj(1, 0) == std::complex<double>(-1, 0));
  CHECK(cj(1, 1) == std::complex<double>(0, 0));
  CHECK(qslice::complex_adjoint(QMatrix::identity(2)).isApprox(qslice::CMatrix::Identity(4, 4)));

  qslice::gen::Rng rng(11);
  for (int n = 0; n < 10; ++n) {
    const QMatrix m = qslice::gen::matrix(rng, 3, 3);
    const QMatrix k = qslice::gen::matrix(rng, 3, 3);
    const qslice::CMatrix gap = qslice::complex_adjoint(m * k) - qslice::complex_adjoint(m) * qslice::complex_adjoint(k);
    CHECK(gap.norm() < 1e-12);
    CHECK((qslice::complex_adjoint(m.adjoint()) - qslice::complex_adjoint(m).adjoint()).norm() == 0.0);
    CHECK(oracle::max_abs_diff(qslice::from_complex_adjoint(qslice::complex_adjoint(m)), m) == 0.0);
  }
}

TEST_CASE("Hermitian eigenstructure") {
  const auto h1 = qslice::herm_eig(QMatrix::diag({1.0, -1.0}));
  CHECK(h1.eigenvalues == std::vector<double>{-1.0, 1.0});
  CHECK(h1.signature == qslice::Signature{1, 1, 0});

  const auto h2 = qslice::herm_eig(QMatrix::diag({2.0, 3.0}));
  CHECK(h2.signature == qslice::Signature{2, 0, 0});

  const QMatrix hk{{0.0, Quaternion::k()}, {-Quaternion::k(), 0.0}};
  const auto h3 = qslice::herm_eig(hk);
  REQUIRE(h3.eigenvalues.size() == 2);
  CHECK(h3.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(h3.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h3.signature == qslice::Signature{1, 1, 0});
  // Oracle: eigenvalues of the complex adjoint come in equal pairs.
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<qslice::CMatrix>(qslice::complex_adjoint(hk)).eigenvalues();
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(3) == doctest::Approx(1.0));

  const auto h4 = qslice::herm_eig(QMatrix::diag({0.0, 4.0, -9.0}));
  CHECK(h4.signature == qslice::Signature{1, 1, 1});
  const QMatrix v = h4.congruence;
  CHECK(oracle::max_abs_diff(v * qslice::signature_matrix(h4.signature) * v.adjoint(), QMatrix::diag({0.0, 4.0, -9.0})) <
        1e-14);

  CHECK_THROWS_AS(qslice::herm_eig(QMatrix{{0.0, 1.0}, {2.0, 0.0}}), qslice::Error);
}

TEST_CASE("Hermitian eigenstructure of random matrices") {
  qslice::gen::Rng rng(12);
  for (int n = 0; n < 20; ++n) {
    const QMatrix a = qslice::gen::matrix(rng, 4, 4);
    const QMatrix h = a + a.adjoint();
    const auto hs = qslice::herm_eig(h);
    std::vector<Quaternion> d(hs.eigenvalues.begin(), hs.eigenvalues.end());
    CHECK(qslice::norm(hs.unitary * QMatrix::diag(d) * hs.unitary.adjoint() - h) < 1e-12);
    CHECK(qslice::norm(hs.unitary.adjoint() * hs.unitary - QMatrix::identity(4)) < 1e-12);
    CHECK(qslice::norm(hs.congruence * qslice::signature_matrix(hs.signature) * hs.congruence.adjoint() - h) < 1e-12);
  }
}

TEST_CASE("right eigen spheres") {
  const auto s12 = qslice::right_eigen_spheres(QMatrix::diag({1.0, 2.0}));
  REQUIRE(s12.size() == 2);
  CHECK(s12[0].sphere.re == doctest::Approx(1.0));
  CHECK(s12[1].sphere.re == doctest::Approx(2.0));
  CHECK(s12[0].multiplicity == 1);

  const auto sij = qslice::right_eigen_spheres(QMatrix::diag({Quaternion::i(), Quaternion::j()}));
  REQUIRE(sij.size() == 1);
  CHECK(sij[0].sphere.re == doctest::Approx(0.0));
  CHECK(sij[0].sphere.im_mag == doctest::Approx(1.0));
  CHECK(sij[0].multiplicity == 2);

  const Quaternion q(0.3, -1.0, 0.5, 2.0);
  const auto s1 = qslice::right_eigen_spheres(QMatrix{{q}});
  REQUIRE(s1.size() == 1);
  CHECK(qslice::same_sphere(s1[0].sphere, qslice::sphere_of(q), 1e-12));
}

TEST_CASE("characteristic operator and eigencheck") {
  const Quaternion q(0.2, 0.7, -0.1, 0.4);
  CHECK(qslice::norm(qslice::char_operator(QMatrix{{q}}, q)) < 1e-15);
  const QMatrix real_t = QMatrix::diag({1.0, 4.0});
  CHECK(oracle::max_abs_diff(qslice::char_operator(real_t, 2.0), QMatrix::diag({1.0, 4.0})) < 1e-15);

  CHECK(qslice::s_eigencheck(QMatrix{{Quaternion::i()}}, QMatrix{{1.0}}, Quaternion::i()) == 0.0);
  CHECK(qslice::s_eigencheck(QMatrix::diag({Quaternion::i(), Quaternion::j()}), QMatrix::unit_vector(2, 1),
                             Quaternion::j()) == 0.0);
  CHECK_THROWS_AS(qslice::s_eigencheck(real_t, QMatrix(2, 1), 1.0), qslice::Error);

  qslice::gen::Rng rng(13);
  const QMatrix t = qslice::gen::matrix(rng, 3, 3);
  for (const auto& sm : qslice::right_eigen_spheres(t)) {
    const Quaternion s = sm.sphere.point(qslice::gen::unit_imaginary(rng));
    CHECK(qslice::singular_values(qslice::char_operator(t, s)).back() < 1e-10);
  }
  // Negative control: a random vector is not an S-eigenvector.
  CHECK(qslice::s_eigencheck(t, qslice::gen::matrix(rng, 3, 1), 0.5) > 1e-3);
}

TEST_CASE("right eigenpairs") {
  qslice::gen::Rng rng(14);
  for (int n = 0; n < 10; ++n) {
    const QMatrix t = qslice::gen::matrix(rng, 4, 4);
    const auto pairs = qslice::right_eigenpairs(t);
    CHECK(pairs.size() == 4);
    for (const auto& pr : pairs) {
      CHECK(qslice::norm(t * pr.vector - pr.vector * pr.value) < 1e-10);
      CHECK(pr.value.x2 == 0.0);
      CHECK(pr.value.x3 == 0.0);
      CHECK(pr.value.x1 >= 0.0);
    }
  }
}

TEST_CASE("linear solves") {
  const QMatrix rhs{{Quaternion(1, 2, 3, 4)}, {Quaternion::k()}};
  CHECK(qslice::solve(QMatrix::identity(2), rhs) == rhs);
  CHECK(qslice::solve(QMatrix{{2.0}}, QMatrix{{1.0}})(0, 0) == Quaternion(0.5));
  CHECK_THROWS_AS(qslice::solve(QMatrix{{1.0, 1.0}, {1.0, 1.0}}, rhs), qslice::Error);

  qslice::gen::Rng rng(15);
  const QMatrix m = QMatrix::identity(4) + qslice::gen::matrix_with_norm(rng, 4, 4, 0.5);
  const QMatrix b = qslice::gen::matrix(rng, 4, 2);
  const QMatrix x = qslice::solve(m, b);
  CHECK(qslice::norm(oracle::matmul(m, x) - b) < 1e-13);
  CHECK(qslice::norm(qslice::inverse(m) * m - QMatrix::identity(4)) < 1e-13);
}

TEST_CASE("rank, singular values and orthonormal bases") {
  const QMatrix u{{1.0}, {Quaternion::j()}};
  const QMatrix r1 = u * QMatrix{{Quaternion::i(), 2.0}};
  CHECK(qslice::rank(r1, 1e-12) == 1);
  const auto sv = qslice::singular_values(QMatrix::diag({3.0, Quaternion(0, 0, 0, -4)}));
  REQUIRE(sv.size() == 2);
  CHECK(sv[0] == doctest::Approx(4.0));
  CHECK(sv[1] == doctest::Approx(3.0));
  const QMatrix q = qslice::orthonormal_basis(r1, 1e-12);
  CHECK(q.cols() == 1);
  CHECK(qslice::norm(q.adjoint() * q - QMatrix::identity(1)) < 1e-14);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(QMatrix(2, 3) * QMatrix(2, 3), qslice::Error);
  CHECK_THROWS_AS(QMatrix(2, 3) + QMatrix(3, 2), qslice::Error);
}

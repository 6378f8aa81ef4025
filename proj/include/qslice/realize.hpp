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

#include "qslice/blaschke.hpp"
#include "qslice/kernels.hpp"
#include "qslice/qmatrix.hpp"
#include "qslice/series.hpp"

namespace qslice {

/// State-space data for S(p) = D + p C * (I_M - p A)^{-*} * B.
///
/// sigma and P are the signature and Stein Gram matrix when the realization is
/// certified; algebra helpers (cascade, invert) leave P empty.
struct Realization {
  QMatrix A;
  QMatrix B;
  QMatrix C;
  QMatrix D;
  QMatrix sigma;
  QMatrix P;

  std::size_t state_dim() const { return A.rows(); }
};

struct SteinResult {
  QMatrix P;
  double residual = 0.0;
  bool invertible = false;
};

/// Hermitian solution of P - A* P A = C* sigma C through the vectorized
/// complex-adjoint system. Throws SteinSingular when conj(l_i) l_j = 1 for a
/// pair of eigenvalues of chi(A).
SteinResult stein_solve(const QMatrix& a, const QMatrix& c, const QMatrix& sigma);

/// ||P - A* P A - C* sigma C||.
double stein_residual(const QMatrix& a, const QMatrix& c, const QMatrix& sigma, const QMatrix& p);

/// Rank test on [C; CA; ...; CA^{M-1}].
bool is_observable(const QMatrix& c, const QMatrix& a);

struct Completion {
  QMatrix B;
  QMatrix D;
  double congruence_residual = 0.0;
};

/// Completes (A, C) to a block matrix G = [[A, B], [C, D]] with
/// G diag(P^{-1}, sigma) G* = diag(P^{-1}, sigma). Throws NotObservable,
/// Singular (P not invertible), BadSignatureMatrix, CompletionFailure.
Completion j_unitary_complete(const QMatrix& a, const QMatrix& c, const QMatrix& sigma, const QMatrix& p);

/// ||G diag(P^{-1}, sigma) G* - diag(P^{-1}, sigma)||.
double congruence_residual(const Realization& r);
/// ||G* diag(P, sigma) G - diag(P, sigma)||.
double congruence_residual_dual(const Realization& r);

/// Stein solve followed by the completion; the result carries sigma and P.
Realization realize(const QMatrix& a, const QMatrix& c, const QMatrix& sigma);

/// sum_n p^n C A^n X, evaluated in closed form as C Q^{-1} X - conj(p) C A Q^{-1} X
/// with Q = |p|^2 A^2 - 2 Re(p) A + I. Throws OnPoleSphere.
QMatrix left_transfer_eval(const QMatrix& c, const QMatrix& a, const QMatrix& x, const Quaternion& p);

/// D + p * left_transfer_eval(C, A, B, p).
QMatrix realization_eval(const Realization& r, const Quaternion& p);

/// Coefficients D, CB, CAB, ... up to `degree`.
SliceSeries realization_series(const Realization& r, int degree = kDefaultDegree);

/// Frobenius residual of sigma - S(p) sigma S(q)* against the state-space
/// expression built from P^{-1}.
double kernel_identity_residual(const Realization& r, const Quaternion& p, const Quaternion& q);

/// sigma = I variant with D = I - C E, B = (I - A) E, E = P^{-1} (I - A)^{-*} C*.
/// Throws IMinusASingular.
Realization realization_sigma_I(const QMatrix& a, const QMatrix& c, const QMatrix& p);
SliceSeries realization_sigma_I_series(const QMatrix& a, const QMatrix& c, const QMatrix& p,
                                       int degree = kDefaultDegree);

/// Realization of first * second (first on the left).
Realization cascade(const Realization& first, const Realization& second);
/// Realization of the *-inverse; throws BNotInvertibleAtZero when D is singular.
Realization invert(const Realization& r);
/// Zero-state realization of a constant.
Realization constant_realization(const QMatrix& d);
Realization blaschke_point_realization(const Quaternion& a);
Realization blaschke_sphere_realization(const Sphere& c);

/// B^{-*} * S0. Throws BNotInvertibleAtZero.
SliceSeries krein_langer_compose(const SliceSeries& b, const SliceSeries& s0);

struct KreinLangerResult {
  Realization blaschke;  // B, inner, with zeros at the reflected outside spectrum
  Realization theta;     // B^{-*}, the sigma = I completion of the outside part
  SliceSeries blaschke_series;
  SliceSeries schur_series;     // S0 = B * S
  SliceSeries original_series;  // S
  std::vector<SphereMultiplicity> outside_spheres;  // spectrum of A outside the closed ball
  std::vector<SphereMultiplicity> zero_spheres;     // spectrum of the state matrix of B
  int outside_dim = 0;
  NegSquares kappa_original;
  NegSquares kappa_schur;
  double recomposition_error = 0.0;  // max coefficient gap between B^{-*} * S0 and S
  double gram_max_eigenvalue = 0.0;  // largest eigenvalue of G; negative when G < 0
};

/// Splits S = B^{-*} * S0 from a realization of S with sigma = I. The series
/// degree is capped by the caller; coefficients of S grow like the outside
/// spectral radius, so keep degree near mu_max.
/// Throws SpectrumOnUnitSphere, NotDiagonalizable.
KreinLangerResult krein_langer_factor(const Realization& r, int degree = kDefaultMuMax, int mu_max = kDefaultMuMax);

}  // namespace qslice

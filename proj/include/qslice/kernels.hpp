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
#include "qslice/series.hpp"

namespace qslice {

inline constexpr int kDefaultMuMax = 16;
inline constexpr int kStabilizationWindow = 3;

/// Coefficients a_{n,m} of a kernel K(p, q) = sum p^n a_{n,m} conj(q)^m, for
/// 0 <= n, m <= mu_max. Each a_{n,m} is N x N.
class KernelCoeffs {
 public:
  KernelCoeffs(int mu_max, std::size_t block, std::vector<QMatrix> a);

  int mu_max() const { return mu_max_; }
  std::size_t block() const { return block_; }
  const QMatrix& operator()(int n, int m) const {
    return a_[static_cast<std::size_t>(n) * static_cast<std::size_t>(mu_max_ + 1) + static_cast<std::size_t>(m)];
  }

  /// A_mu = (a_{n,m})_{n,m<=mu} as an N(mu+1) square block matrix.
  QMatrix block_matrix(int mu) const;

  /// max ||a_{n,m} - a_{m,n}*||; zero for a Hermitian kernel.
  double hermitian_defect() const;

 private:
  int mu_max_;
  std::size_t block_;
  std::vector<QMatrix> a_;
};

/// a_{n,m} = delta_{nm} sigma2 - sum_{k<=min(n,m)} s_{n-k} sigma1 s_{m-k}*.
/// sigma1 is M x M, sigma2 is N x N; both must be signature matrices (Hermitian
/// involutions), else BadSignatureMatrix. Requires mu_max <= S.degree().
KernelCoeffs schur_kernel_coeffs(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2, int mu_max);
/// sigma1 = I_M, sigma2 = I_N.
KernelCoeffs schur_kernel_coeffs(const SliceSeries& s, int mu_max);

/// Pointwise kernel sum_k p^k (sigma2 - S(p) sigma1 S(q)*) conj(q)^k, summed until the
/// geometric factor |p q|^k drops below 1e-17. Needs |p|, |q| < 1.
QMatrix schur_kernel_eval(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2, const Quaternion& p,
                          const Quaternion& q);

/// Coefficients recovered from kernel values by a trapezoid double integral over the
/// circle of the given radius in the slice C_I:
/// a_{n,m} = (1/(4 pi^2 r^{n+m})) int int e^{-I n t} K(r e^{I t}, r e^{I s}) e^{I m s} dt ds.
KernelCoeffs kernel_coeffs_by_quadrature(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2,
                                         int mu_max, double radius, int nodes,
                                         const UnitImaginary& unit = UnitImaginary::i());

struct InertiaRow {
  int mu = 0;
  int negative = 0;
  int zero = 0;
  int positive = 0;
};

/// Negative squares read off the inertia of A_0, ..., A_{mu_max}.
///
/// kappa is the largest negative count seen. `stabilized` reports whether the
/// count was constant over the last kStabilizationWindow values of mu; when it is
/// not, kappa is only a lower bound at this truncation.
struct NegSquares {
  int kappa = 0;
  bool stabilized = false;
  std::vector<InertiaRow> table;
};

NegSquares neg_squares(const KernelCoeffs& k, int mu_max);
NegSquares neg_squares(const KernelCoeffs& k);

/// Lower block-triangular Toeplitz matrix of the coefficients of alpha, (mu+1) blocks.
QMatrix lower_block_toeplitz(const SliceSeries& alpha, int mu);

struct CongruenceCheck {
  NegSquares original;
  NegSquares transformed;  // inertia of L A_mu L*
  bool kappa_equal = false;    // negative counts agree for every mu
  bool inertia_equal = false;  // negative and positive counts agree for every mu
};

/// Compares inertias of A_mu and L_alpha A_mu L_alpha* for mu <= mu_max.
/// Throws AlphaNotInvertibleAtZero when alpha_0 is singular.
CongruenceCheck congruence_check(const KernelCoeffs& k, const SliceSeries& alpha, int mu_max);

/// Inertia of one Hermitian matrix with the kernel tolerance 1e-8 ||H||.
InertiaRow inertia(const QMatrix& h);

}  // namespace qslice

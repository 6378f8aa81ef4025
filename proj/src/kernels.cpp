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

#include "qslice/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslice/error.hpp"

namespace qslice {

KernelCoeffs::KernelCoeffs(int mu_max, std::size_t block, std::vector<QMatrix> a)
    : mu_max_(mu_max), block_(block), a_(std::move(a)) {
  const auto count = static_cast<std::size_t>(mu_max + 1) * static_cast<std::size_t>(mu_max + 1);
  if (mu_max < 0 || a_.size() != count) throw Error(ErrorKind::ShapeMismatch, "kernel coefficient table size");
}

QMatrix KernelCoeffs::block_matrix(int mu) const {
  if (mu > mu_max_) throw Error(ErrorKind::ShapeMismatch, "mu exceeds the stored kernel truncation");
  const std::size_t n = block_ * static_cast<std::size_t>(mu + 1);
  QMatrix out(n, n);
  for (int r = 0; r <= mu; ++r) {
    for (int c = 0; c <= mu; ++c) out.set_block(block_ * r, block_ * c, (*this)(r, c));
  }
  return out;
}

double KernelCoeffs::hermitian_defect() const {
  double d = 0.0;
  for (int n = 0; n <= mu_max_; ++n) {
    for (int m = 0; m <= mu_max_; ++m) d = std::max(d, norm((*this)(n, m) - (*this)(m, n).adjoint()));
  }
  return d;
}

KernelCoeffs schur_kernel_coeffs(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2, int mu_max) {
  require_signature_matrix(sigma1, "sigma1");
  require_signature_matrix(sigma2, "sigma2");
  if (sigma1.rows() != s.cols() || sigma2.rows() != s.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "signature sizes do not match the series shape");
  }
  if (mu_max < 0 || mu_max > s.degree()) {
    throw Error(ErrorKind::ShapeMismatch, "mu_max must lie in [0, degree of the series]");
  }
  // Precompute s_a sigma1 s_b* for all a, b <= mu_max.
  const auto w = static_cast<std::size_t>(mu_max + 1);
  std::vector<QMatrix> adj;
  std::vector<QMatrix> left;
  for (int a = 0; a <= mu_max; ++a) {
    adj.push_back(s[a].adjoint());
    left.push_back(s[a] * sigma1);
  }
  std::vector<QMatrix> out;
  out.reserve(w * w);
  for (int n = 0; n <= mu_max; ++n) {
    for (int m = 0; m <= mu_max; ++m) {
      QMatrix acc = n == m ? sigma2 : QMatrix(s.rows(), s.rows());
      for (int k = 0; k <= std::min(n, m); ++k) acc -= left[static_cast<std::size_t>(n - k)] * adj[static_cast<std::size_t>(m - k)];
      out.push_back(std::move(acc));
    }
  }
  return {mu_max, s.rows(), std::move(out)};
}

KernelCoeffs schur_kernel_coeffs(const SliceSeries& s, int mu_max) {
  return schur_kernel_coeffs(s, QMatrix::identity(s.cols()), QMatrix::identity(s.rows()), mu_max);
}

QMatrix schur_kernel_eval(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2, const Quaternion& p,
                          const Quaternion& q) {
  const double rho = p.norm() * q.norm();
  if (rho >= 1.0) throw Error(ErrorKind::InvalidSpec, "kernel evaluation needs |p|, |q| < 1");
  const QMatrix x = sigma2 - eval(s, p) * sigma1 * eval(s, q).adjoint();
  // sum_k p^k X conj(q)^k by repeated two-sided multiplication.
  QMatrix term = x;
  QMatrix acc = x;
  double geo = 1.0;
  const Quaternion qc = q.conj();
  while (geo > 1e-17) {
    term = p * term * qc;
    acc += term;
    geo *= rho;
  }
  return acc;
}

KernelCoeffs kernel_coeffs_by_quadrature(const SliceSeries& s, const QMatrix& sigma1, const QMatrix& sigma2,
                                         int mu_max, double radius, int nodes, const UnitImaginary& unit) {
  if (radius <= 0.0 || radius >= 1.0 || nodes < 2 * (mu_max + 1)) {
    throw Error(ErrorKind::InvalidSpec, "quadrature needs 0 < radius < 1 and enough nodes");
  }
  const std::size_t n_out = s.rows();
  const double step = 2.0 * std::numbers::pi / nodes;
  std::vector<Quaternion> pts;
  for (int t = 0; t < nodes; ++t) pts.push_back(radius * slice_exp(unit.q(), t * step));
  std::vector<QMatrix> kv;
  kv.reserve(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes));
  for (int t = 0; t < nodes; ++t) {
    for (int u = 0; u < nodes; ++u) kv.push_back(schur_kernel_eval(s, sigma1, sigma2, pts[t], pts[u]));
  }
  const auto w = static_cast<std::size_t>(mu_max + 1);
  std::vector<QMatrix> out(w * w, QMatrix(n_out, n_out));
  for (int n = 0; n <= mu_max; ++n) {
    for (int m = 0; m <= mu_max; ++m) {
      QMatrix acc(n_out, n_out);
      for (int t = 0; t < nodes; ++t) {
        const Quaternion left = slice_exp(unit.q(), -n * t * step);
        for (int u = 0; u < nodes; ++u) {
          acc += left * kv[static_cast<std::size_t>(t) * nodes + u] * slice_exp(unit.q(), m * u * step);
        }
      }
      const double scale = 1.0 / (static_cast<double>(nodes) * nodes * std::pow(radius, n + m));
      out[static_cast<std::size_t>(n) * w + static_cast<std::size_t>(m)] = scale * acc;
    }
  }
  return {mu_max, n_out, std::move(out)};
}

InertiaRow inertia(const QMatrix& h) {
  const double scale = singular_values(h).empty() ? 0.0 : singular_values(h).front();
  const HermSpectrum hs = herm_eig(h, 1e-8 * scale);
  return {0, hs.signature.negative, hs.signature.zero, hs.signature.positive};
}

namespace {

NegSquares summarize(std::vector<InertiaRow> table) {
  NegSquares out;
  for (const auto& row : table) out.kappa = std::max(out.kappa, row.negative);
  const auto len = static_cast<int>(table.size());
  if (len >= kStabilizationWindow) {
    out.stabilized = true;
    for (int i = len - kStabilizationWindow; i < len; ++i) {
      out.stabilized = out.stabilized && table[static_cast<std::size_t>(i)].negative == table.back().negative;
    }
  }
  out.table = std::move(table);
  return out;
}

}  // namespace

NegSquares neg_squares(const KernelCoeffs& k, int mu_max) {
  if (mu_max > k.mu_max()) throw Error(ErrorKind::ShapeMismatch, "mu_max exceeds the stored kernel truncation");
  std::vector<InertiaRow> table;
  for (int mu = 0; mu <= mu_max; ++mu) {
    InertiaRow row = inertia(k.block_matrix(mu));
    row.mu = mu;
    table.push_back(row);
  }
  return summarize(std::move(table));
}

NegSquares neg_squares(const KernelCoeffs& k) { return neg_squares(k, k.mu_max()); }

QMatrix lower_block_toeplitz(const SliceSeries& alpha, int mu) {
  if (mu > alpha.degree()) throw Error(ErrorKind::ShapeMismatch, "alpha is truncated below mu");
  const std::size_t r = alpha.rows();
  const std::size_t c = alpha.cols();
  QMatrix out(r * static_cast<std::size_t>(mu + 1), c * static_cast<std::size_t>(mu + 1));
  for (int i = 0; i <= mu; ++i) {
    for (int j = 0; j <= i; ++j) out.set_block(r * i, c * j, alpha[i - j]);
  }
  return out;
}

CongruenceCheck congruence_check(const KernelCoeffs& k, const SliceSeries& alpha, int mu_max) {
  if (!alpha.is_scalar() && (alpha.rows() != k.block() || alpha.cols() != k.block())) {
    throw Error(ErrorKind::ShapeMismatch, "alpha must be scalar or match the kernel block size");
  }
  const std::size_t sv_count = singular_values(alpha[0]).size();
  const double smin = sv_count == 0 ? 0.0 : singular_values(alpha[0]).back();
  if (smin <= 1e-12 * (1.0 + alpha[0].max_abs())) {
    throw Error(ErrorKind::AlphaNotInvertibleAtZero, "alpha(0) is singular");
  }
  CongruenceCheck out;
  out.original = neg_squares(k, mu_max);
  std::vector<InertiaRow> table;
  for (int mu = 0; mu <= mu_max; ++mu) {
    QMatrix l = lower_block_toeplitz(alpha, mu);
    if (alpha.is_scalar() && k.block() != 1) {
      // Scalar alpha acts as alpha_n I_N on each block.
      QMatrix big(k.block() * (mu + 1), k.block() * (mu + 1));
      for (int i = 0; i <= mu; ++i) {
        for (int j = 0; j <= i; ++j) big.set_block(k.block() * i, k.block() * j, alpha.scalar(i - j) * QMatrix::identity(k.block()));
      }
      l = big;
    }
    InertiaRow row = inertia(l * k.block_matrix(mu) * l.adjoint());
    row.mu = mu;
    table.push_back(row);
  }
  out.transformed = summarize(std::move(table));
  out.kappa_equal = true;
  out.inertia_equal = true;
  for (std::size_t i = 0; i < out.original.table.size(); ++i) {
    const bool neg = out.original.table[i].negative == out.transformed.table[i].negative;
    out.kappa_equal = out.kappa_equal && neg;
    out.inertia_equal = out.inertia_equal && neg && out.original.table[i].positive == out.transformed.table[i].positive;
  }
  return out;
}

}  // namespace qslice

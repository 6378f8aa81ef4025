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

#include "qslice/realize.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>

#include "qslice/error.hpp"

namespace qslice {

namespace {

constexpr double kNeutralTol = 1e-10;
constexpr double kUnitSphereBand = 1e-8;

void require_square(const QMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " must be square");
}

// Self inner product Re(x* J x) for a column x.
double self_inner(const QMatrix& x, const QMatrix& j) { return (x.adjoint() * j * x)(0, 0).re(); }

// Orthonormal basis of the right eigenspace of A for eigenvalues of modulus > 1.
// Each cluster of chi(A)-eigenvalues must have a null space of full dimension,
// otherwise A is not diagonalizable.
QMatrix outside_eigenspace(const QMatrix& a) {
  const std::size_t m = a.rows();
  if (m == 0) return QMatrix(0, 0);
  const CMatrix ca = complex_adjoint(a);
  const Eigen::VectorXcd lam = Eigen::ComplexEigenSolver<CMatrix>(ca, false).eigenvalues();
  const double scale = 1.0 + ca.norm();
  std::vector<bool> used(static_cast<std::size_t>(lam.size()), false);
  QMatrix vectors(m, 0);
  std::size_t outside_count = 0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::complex<double> sum = 0.0;
    Eigen::Index alg = 0;
    for (Eigen::Index j = i; j < lam.size(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(lam(j) - lam(i)) <= kClusterTol * (1.0 + std::abs(lam(i)))) {
        used[static_cast<std::size_t>(j)] = true;
        sum += lam(j);
        ++alg;
      }
    }
    const std::complex<double> mean = sum / static_cast<double>(alg);
    const CMatrix shifted = ca - mean * CMatrix::Identity(ca.rows(), ca.cols());
    const Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index geo = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) geo += sv(k) <= 1e-7 * scale ? 1 : 0;
    if (geo < alg) throw Error(ErrorKind::NotDiagonalizable, "chi(A) has a defective eigenvalue");
    if (std::abs(mean) > 1.0) {
      outside_count += static_cast<std::size_t>(alg);
      for (Eigen::Index k = sv.size() - alg; k < sv.size(); ++k) {
        vectors = hstack(vectors, quaternion_vector_from_complex(svd.matrixV().col(k)));
      }
    }
  }
  const QMatrix basis = orthonormal_basis(vectors, 1e-8);
  if (2 * basis.cols() != outside_count) {
    throw Error(ErrorKind::NotDiagonalizable, "outside eigenvectors do not span a subspace of full dimension");
  }
  return basis;
}

}  // namespace

SteinResult stein_solve(const QMatrix& a, const QMatrix& c, const QMatrix& sigma) {
  require_square(a, "A");
  require_square(sigma, "sigma");
  if (c.cols() != a.rows() || c.rows() != sigma.rows()) throw Error(ErrorKind::ShapeMismatch, "stein_solve shapes");
  if ((sigma - sigma.adjoint()).max_abs() > 1e-12 * (1.0 + sigma.max_abs())) {
    throw Error(ErrorKind::NotHermitian, "sigma must be Hermitian");
  }
  const CMatrix ca = complex_adjoint(a);
  const Eigen::Index n = ca.rows();
  SteinResult out;
  if (n == 0) {
    out.P = QMatrix(0, 0);
    out.invertible = true;
    return out;
  }
  const Eigen::VectorXcd lam = Eigen::ComplexEigenSolver<CMatrix>(ca, false).eigenvalues();
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) gap = std::min(gap, std::abs(1.0 - std::conj(lam(i)) * lam(j)));
  }
  if (gap <= 1e-10) throw Error(ErrorKind::SteinSingular, "eigenvalue pair with conj(l_i) l_j = 1");

  // vec(X - chi(A)* X chi(A)) = K vec(X), column-major vec.
  const CMatrix cah = ca.adjoint();
  CMatrix k = CMatrix::Identity(n * n, n * n);
  for (Eigen::Index jcol = 0; jcol < n; ++jcol) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index l = 0; l < n; ++l) {
        const std::complex<double> alj = ca(l, jcol);
        if (alj == 0.0) continue;
        for (Eigen::Index kk = 0; kk < n; ++kk) k(i + jcol * n, kk + l * n) -= cah(i, kk) * alj;
      }
    }
  }
  const CMatrix rhs = complex_adjoint(c.adjoint() * sigma * c);
  const Eigen::VectorXcd x = k.partialPivLu().solve(Eigen::Map<const Eigen::VectorXcd>(rhs.data(), n * n));
  const CMatrix xm = Eigen::Map<const CMatrix>(x.data(), n, n);
  QMatrix p = from_complex_adjoint(xm);
  p = 0.5 * (p + p.adjoint());
  out.P = p;
  out.residual = stein_residual(a, c, sigma, p);
  const std::vector<double> sv = singular_values(p);
  out.invertible = !sv.empty() && sv.back() > 1e-12 * sv.front();
  return out;
}

double stein_residual(const QMatrix& a, const QMatrix& c, const QMatrix& sigma, const QMatrix& p) {
  return norm(p - a.adjoint() * p * a - c.adjoint() * sigma * c);
}

bool is_observable(const QMatrix& c, const QMatrix& a) {
  const std::size_t m = a.rows();
  if (m == 0) return true;
  QMatrix stack = c;
  QMatrix block = c;
  for (std::size_t n = 1; n < m; ++n) {
    block = block * a;
    stack = vstack(stack, block);
  }
  return rank(stack, 1e-10) == m;
}

Completion j_unitary_complete(const QMatrix& a, const QMatrix& c, const QMatrix& sigma, const QMatrix& p) {
  require_square(a, "A");
  require_square(p, "P");
  require_signature_matrix(sigma, "sigma");
  const std::size_t m = a.rows();
  const std::size_t nout = sigma.rows();
  if (c.rows() != nout || c.cols() != m || p.rows() != m) throw Error(ErrorKind::ShapeMismatch, "completion shapes");
  if (!is_observable(c, a)) throw Error(ErrorKind::NotObservable, "(C, A) is not observable");
  if (stein_residual(a, c, sigma, p) > 1e-8 * (1.0 + norm(p))) {
    throw Error(ErrorKind::CompletionFailure, "P does not satisfy the Stein equation");
  }
  const HermSpectrum hp = herm_eig(p);
  if (hp.signature.zero > 0) throw Error(ErrorKind::Singular, "P is not invertible");
  const QMatrix& v = hp.congruence;
  const QMatrix vinv_adj = inverse(v).adjoint();
  const QMatrix sig_ts = signature_matrix(hp.signature);
  const QMatrix jhat = block_diag(sig_ts, sigma);
  const QMatrix w = vstack(v.adjoint() * a * vinv_adj, c * vinv_adj);
  if (norm(w.adjoint() * jhat * w - sig_ts) > 1e-8 * (1.0 + norm(p))) {
    throw Error(ErrorKind::CompletionFailure, "first block column is not J-orthonormal");
  }

  // Indefinite Gram-Schmidt: extend the columns of w by projected standard basis
  // vectors, always taking the candidate of largest |self inner product|.
  const std::size_t total = m + nout;
  QMatrix basis = w;
  std::vector<double> signs;
  for (std::size_t k = 0; k < m; ++k) signs.push_back(sig_ts(k, k).re());
  auto project = [&](const QMatrix& x) {
    QMatrix coeff = basis.adjoint() * jhat * x;
    for (std::size_t k = 0; k < signs.size(); ++k) coeff(k, 0) = coeff(k, 0) * signs[k];
    return x - basis * coeff;
  };
  std::vector<QMatrix> fresh;
  std::vector<double> fresh_signs;
  for (std::size_t step = 0; step < nout; ++step) {
    std::vector<QMatrix> cands;
    for (std::size_t e = 0; e < total; ++e) cands.push_back(project(QMatrix::unit_vector(total, e)));
    QMatrix best;
    double best_eta = 0.0;
    for (const auto& x : cands) {
      const double eta = self_inner(x, jhat);
      if (std::abs(eta) > std::abs(best_eta)) {
        best_eta = eta;
        best = x;
      }
    }
    if (std::abs(best_eta) < kNeutralTol) {
      // Every projected basis vector is neutral; try pairwise combinations x + y u.
      const std::array<Quaternion, 4> units{Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
      for (std::size_t s = 0; s < cands.size(); ++s) {
        for (std::size_t t = s + 1; t < cands.size(); ++t) {
          for (const auto& u : units) {
            const QMatrix x = cands[s] + cands[t] * u;
            const double eta = self_inner(x, jhat);
            if (std::abs(eta) > std::abs(best_eta)) {
              best_eta = eta;
              best = x;
            }
          }
        }
      }
    }
    if (std::abs(best_eta) < kNeutralTol) {
      throw Error(ErrorKind::CompletionFailure, "only neutral candidates remain");
    }
    QMatrix x = best * (1.0 / std::sqrt(std::abs(best_eta)));
    x = project(x);  // second pass against rounding drift
    const double eta = self_inner(x, jhat);
    x = x * (1.0 / std::sqrt(std::abs(eta)));
    const double sgn = eta > 0.0 ? 1.0 : -1.0;
    basis = hstack(basis, x);
    signs.push_back(sgn);
    fresh.push_back(x);
    fresh_signs.push_back(sgn);
  }

  // Order the new vectors positives first, then map diag(I_t, -I_r) onto sigma.
  const HermSpectrum hs = herm_eig(sigma);
  const int npos = static_cast<int>(std::count(fresh_signs.begin(), fresh_signs.end(), 1.0));
  if (npos != hs.signature.positive || static_cast<int>(nout) - npos != hs.signature.negative) {
    throw Error(ErrorKind::CompletionFailure, "complement signature does not match sigma");
  }
  QMatrix x0(total, nout);
  std::size_t col = 0;
  for (const double want : {1.0, -1.0}) {
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      if (fresh_signs[k] == want) x0.set_block(0, col++, fresh[k]);
    }
  }
  const QMatrix x = x0 * hs.congruence.adjoint();
  Completion out;
  out.B = vinv_adj * x.block(0, 0, m, nout);
  out.D = x.block(m, 0, nout, nout);
  out.congruence_residual = congruence_residual({a, out.B, c, out.D, sigma, p});
  return out;
}

namespace {

QMatrix assemble(const Realization& r) {
  const std::size_t m = r.A.rows();
  const std::size_t n = r.D.rows();
  QMatrix g(m + n, m + r.D.cols());
  g.set_block(0, 0, r.A);
  g.set_block(0, m, r.B);
  g.set_block(m, 0, r.C);
  g.set_block(m, m, r.D);
  return g;
}

}  // namespace

double congruence_residual(const Realization& r) {
  const QMatrix g = assemble(r);
  const QMatrix j = block_diag(inverse(r.P), r.sigma);
  return norm(g * j * g.adjoint() - j);
}

double congruence_residual_dual(const Realization& r) {
  const QMatrix g = assemble(r);
  const QMatrix j = block_diag(r.P, r.sigma);
  return norm(g.adjoint() * j * g - j);
}

Realization realize(const QMatrix& a, const QMatrix& c, const QMatrix& sigma) {
  const SteinResult st = stein_solve(a, c, sigma);
  if (!st.invertible) throw Error(ErrorKind::Singular, "Stein solution is not invertible");
  const Completion comp = j_unitary_complete(a, c, sigma, st.P);
  return {a, comp.B, c, comp.D, sigma, st.P};
}

QMatrix left_transfer_eval(const QMatrix& c, const QMatrix& a, const QMatrix& x, const Quaternion& p) {
  const std::size_t m = a.rows();
  const QMatrix q = p.norm2() * (a * a) - (2.0 * p.re()) * a + QMatrix::identity(m);
  QMatrix y;
  try {
    y = solve(q, x);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) throw Error(ErrorKind::OnPoleSphere, "p lies on a pole sphere");
    throw;
  }
  const QMatrix cy = c * y;
  return cy - p.conj() * (c * (a * y));
}

QMatrix realization_eval(const Realization& r, const Quaternion& p) {
  return r.D + p * left_transfer_eval(r.C, r.A, r.B, p);
}

SliceSeries realization_series(const Realization& r, int degree) {
  std::vector<QMatrix> coeff{r.D};
  QMatrix ca = r.C;
  for (int n = 1; n <= degree; ++n) {
    coeff.push_back(ca * r.B);
    ca = ca * r.A;
  }
  return SliceSeries(std::move(coeff));
}

double kernel_identity_residual(const Realization& r, const Quaternion& p, const Quaternion& q) {
  const QMatrix lhs = r.sigma - realization_eval(r, p) * r.sigma * realization_eval(r, q).adjoint();
  const QMatrix rq = left_transfer_eval(r.C, r.A, QMatrix::identity(r.A.rows()), q).adjoint();
  const QMatrix term = left_transfer_eval(r.C, r.A, inverse(r.P) * rq, p);
  const QMatrix rhs = term - p * term * q.conj();
  return norm(lhs - rhs);
}

Realization realization_sigma_I(const QMatrix& a, const QMatrix& c, const QMatrix& p) {
  require_square(a, "A");
  const std::size_t m = a.rows();
  const std::size_t n = c.rows();
  const QMatrix ima = QMatrix::identity(m) - a;
  QMatrix e;
  try {
    e = solve(p, solve(ima.adjoint(), c.adjoint()));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Singular) {
      // Distinguish which factor failed.
      if (rank(ima, 1e-12) < m) throw Error(ErrorKind::IMinusASingular, "I - A is singular");
    }
    throw;
  }
  return {a, ima * e, c, QMatrix::identity(n) - c * e, QMatrix::identity(n), p};
}

SliceSeries realization_sigma_I_series(const QMatrix& a, const QMatrix& c, const QMatrix& p, int degree) {
  return realization_series(realization_sigma_I(a, c, p), degree);
}

Realization cascade(const Realization& first, const Realization& second) {
  if (first.D.cols() != second.D.rows()) throw Error(ErrorKind::ShapeMismatch, "cascade: inner sizes differ");
  const std::size_t m1 = first.A.rows();
  const std::size_t m2 = second.A.rows();
  Realization out;
  out.A = QMatrix(m1 + m2, m1 + m2);
  out.A.set_block(0, 0, first.A);
  out.A.set_block(0, m1, first.B * second.C);
  out.A.set_block(m1, m1, second.A);
  out.B = vstack(first.B * second.D, second.B);
  out.C = hstack(first.C, first.D * second.C);
  out.D = first.D * second.D;
  out.sigma = QMatrix::identity(out.D.rows());
  return out;
}

Realization invert(const Realization& r) {
  QMatrix dinv;
  try {
    dinv = inverse(r.D);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular || e.kind() == ErrorKind::ShapeMismatch) {
      throw Error(ErrorKind::BNotInvertibleAtZero, "D is not invertible");
    }
    throw;
  }
  Realization out;
  out.A = r.A - r.B * dinv * r.C;
  out.B = r.B * dinv;
  out.C = -(dinv * r.C);
  out.D = dinv;
  out.sigma = QMatrix::identity(dinv.rows());
  return out;
}

Realization constant_realization(const QMatrix& d) {
  return {QMatrix(0, 0), QMatrix(0, d.cols()), QMatrix(d.rows(), 0), d, QMatrix::identity(d.rows()), QMatrix(0, 0)};
}

Realization blaschke_point_realization(const Quaternion& a) {
  const double m = a.norm();
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::InvalidModulus, "point zero must satisfy 0 < |a| < 1");
  const Quaternion ac = a.conj();
  Realization r{QMatrix::scalar(ac), QMatrix::scalar(ac * ((m * m - 1.0) / m)), QMatrix::scalar(1.0),
                QMatrix::scalar(m), QMatrix::scalar(1.0), QMatrix()};
  r.P = stein_solve(r.A, r.C, r.sigma).P;
  return r;
}

Realization blaschke_sphere_realization(const Sphere& c) {
  const double m = c.modulus();
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::InvalidModulus, "sphere zero must satisfy 0 < |c| < 1");
  const double r = m * m;
  const double x = c.re;
  Realization out{QMatrix{{2.0 * x, 1.0}, {-r, 0.0}}, QMatrix{{-2.0 * x * (1.0 - r)}, {1.0 - r * r}},
                  QMatrix{{1.0, 0.0}}, QMatrix::scalar(r), QMatrix::scalar(1.0), QMatrix()};
  out.P = stein_solve(out.A, out.C, out.sigma).P;
  return out;
}

SliceSeries krein_langer_compose(const SliceSeries& b, const SliceSeries& s0) {
  SliceSeries binv;
  try {
    binv = b.is_scalar() ? star_inverse(b) : formal_star_inverse(b);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInvertibleAtZero) throw Error(ErrorKind::BNotInvertibleAtZero, "B(0) is singular");
    throw;
  }
  if (b.is_scalar() && s0.rows() != 1) {
    // Scalar B acts as B I_N.
    std::vector<QMatrix> big;
    for (int n = 0; n <= binv.degree(); ++n) big.push_back(binv.scalar(n) * QMatrix::identity(s0.rows()));
    binv = SliceSeries(std::move(big));
  }
  return star_mul(binv, s0);
}

KreinLangerResult krein_langer_factor(const Realization& r, int degree, int mu_max) {
  const std::size_t nout = r.D.rows();
  mu_max = std::min(mu_max, degree);
  KreinLangerResult out;

  for (const auto& sm : right_eigen_spheres(r.A)) {
    if (std::abs(sm.sphere.modulus() - 1.0) <= kUnitSphereBand) {
      throw Error(ErrorKind::SpectrumOnUnitSphere, "A has a right eigenvalue of modulus 1");
    }
    if (sm.sphere.modulus() > 1.0) out.outside_spheres.push_back(sm);
  }
  const QMatrix outside = outside_eigenspace(r.A);
  out.outside_dim = static_cast<int>(outside.cols());

  out.original_series = realization_series(r, degree);
  if (out.outside_dim == 0) {
    out.theta = constant_realization(QMatrix::identity(nout));
    out.blaschke = out.theta;
    out.gram_max_eigenvalue = 0.0;
  } else {
    const QMatrix& u = outside;
    const QMatrix a_out = u.adjoint() * r.A * u;
    const QMatrix c_out = r.C * u;
    const QMatrix id = QMatrix::identity(nout);
    const SteinResult g = stein_solve(a_out, c_out, id);
    out.gram_max_eigenvalue = herm_eig(g.P).eigenvalues.back();
    const Completion comp = j_unitary_complete(a_out, c_out, id, g.P);
    out.theta = {a_out, comp.B, c_out, comp.D, id, g.P};
    out.blaschke = invert(out.theta);
    out.blaschke.P = stein_solve(out.blaschke.A, out.blaschke.C, id).P;
  }
  out.zero_spheres = right_eigen_spheres(out.blaschke.A);
  out.blaschke_series = realization_series(out.blaschke, degree);
  out.schur_series = star_mul(out.blaschke_series, out.original_series);
  out.recomposition_error =
      max_coeff_diff(krein_langer_compose(out.blaschke_series, out.schur_series), out.original_series);
  out.kappa_original = neg_squares(schur_kernel_coeffs(out.original_series, mu_max));
  out.kappa_schur = neg_squares(schur_kernel_coeffs(out.schur_series, mu_max));
  return out;
}

}  // namespace qslice

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

#include "qslice/qmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>

#include "qslice/error.hpp"

namespace qslice {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": operand shapes differ");
  }
}

double column_norm2(const QMatrix& m, std::size_t c) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c).norm2();
  return s;
}

// x <- x - w (w* x) for unit column w.
void project_out(QMatrix& x, const QMatrix& w) {
  const Quaternion coef = inner(x, w);
  for (std::size_t r = 0; r < x.rows(); ++r) x(r, 0) -= w(r, 0) * coef;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

QMatrix QMatrix::diag(std::span<const Quaternion> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

QMatrix QMatrix::diag(std::initializer_list<Quaternion> d) {
  return diag(std::span<const Quaternion>(d.begin(), d.size()));
}

QMatrix QMatrix::column(std::span<const Quaternion> v) {
  return {v.size(), 1, std::vector<Quaternion>(v.begin(), v.end())};
}

QMatrix QMatrix::unit_vector(std::size_t n, std::size_t k) {
  QMatrix v(n, 1);
  v(k, 0) = 1.0;
  return v;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

QMatrix QMatrix::conj() const {
  QMatrix out(rows_, cols_);
  std::transform(entries_.begin(), entries_.end(), out.entries_.begin(),
                 [](const Quaternion& q) { return q.conj(); });
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  QMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorKind::ShapeMismatch, "set_block out of range");
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : entries_) s += q.norm2();
  return std::sqrt(s);
}

double QMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : entries_) m = std::max(m, q.norm());
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) { return -1.0 * a; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product: inner dimensions differ");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion& ark = a(r, k);
      if (ark == Quaternion()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

QMatrix operator*(const Quaternion& q, const QMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = q * m(r, c);
  return out;
}

QMatrix operator*(const QMatrix& m, const Quaternion& q) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * q;
  return out;
}

QMatrix operator*(double s, const QMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * s;
  return out;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hstack: row counts differ");
  QMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "vstack: column counts differ");
  QMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

CMatrix complex_adjoint(const QMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  const auto k = static_cast<Eigen::Index>(m.cols());
  CMatrix c(2 * n, 2 * k);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < k; ++s) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
      const std::complex<double> z1 = q.z1();
      const std::complex<double> z2 = q.z2();
      c(r, s) = z1;
      c(r, k + s) = z2;
      c(n + r, s) = -std::conj(z2);
      c(n + r, k + s) = std::conj(z1);
    }
  }
  return c;
}

QMatrix from_complex_adjoint(const CMatrix& c) {
  assert(c.rows() % 2 == 0 && c.cols() % 2 == 0);
  const Eigen::Index n = c.rows() / 2;
  const Eigen::Index k = c.cols() / 2;
  QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < k; ++s) {
      const std::complex<double> z1 = 0.5 * (c(r, s) + std::conj(c(n + r, k + s)));
      const std::complex<double> z2 = 0.5 * (c(r, k + s) - std::conj(c(n + r, s)));
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = Quaternion::from_complex_pair(z1, z2);
    }
  }
  return m;
}

QMatrix quaternion_vector_from_complex(const Eigen::VectorXcd& u) {
  const Eigen::Index n = u.size() / 2;
  QMatrix v(static_cast<std::size_t>(n), 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    v(static_cast<std::size_t>(r), 0) = Quaternion::from_complex_pair(u(r), -std::conj(u(n + r)));
  }
  return v;
}

Quaternion inner(const QMatrix& u, const QMatrix& v) {
  Quaternion s;
  for (std::size_t r = 0; r < u.rows(); ++r) s += v(r, 0).conj() * u(r, 0);
  return s;
}

QMatrix signature_matrix(const Signature& sig) {
  const auto n = static_cast<std::size_t>(sig.positive + sig.negative + sig.zero);
  QMatrix m(n, n);
  for (int k = 0; k < sig.positive; ++k) m(k, k) = 1.0;
  for (int k = 0; k < sig.negative; ++k) m(sig.positive + k, sig.positive + k) = -1.0;
  return m;
}

void require_signature_matrix(const QMatrix& sigma, const char* name) {
  if (!sigma.is_square()) throw Error(ErrorKind::BadSignatureMatrix, std::string(name) + " is not square");
  const double scale = 1.0 + sigma.max_abs();
  if ((sigma - sigma.adjoint()).max_abs() > 1e-12 * scale) {
    throw Error(ErrorKind::BadSignatureMatrix, std::string(name) + " is not Hermitian");
  }
  if ((sigma * sigma - QMatrix::identity(sigma.rows())).max_abs() > 1e-10 * scale) {
    throw Error(ErrorKind::BadSignatureMatrix, std::string(name) + " is not an involution");
  }
}

HermSpectrum herm_eig(const QMatrix& h, std::optional<double> tol_sig) {
  if (!h.is_square()) throw Error(ErrorKind::ShapeMismatch, "herm_eig needs a square matrix");
  const std::size_t n = h.rows();
  const double scale = h.max_abs();
  if ((h - h.adjoint()).max_abs() > 1e-10 * (1.0 + scale)) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within 1e-10");
  }

  HermSpectrum out;
  out.eigenvalues.resize(n);
  out.unitary = QMatrix(n, n);

  bool diagonal = true;
  for (std::size_t r = 0; r < n && diagonal; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && !(h(r, c) == Quaternion())) { diagonal = false; break; }

  if (diagonal) {
    // Exact path: keeps e_k as eigenvectors so downstream constructions stay exact.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h(a, a).x0 < h(b, b).x0; });
    for (std::size_t k = 0; k < n; ++k) {
      out.eigenvalues[k] = h(order[k], order[k]).x0;
      out.unitary(order[k], k) = 1.0;
    }
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(complex_adjoint(h));
    const Eigen::VectorXd& lam = es.eigenvalues();
    const CMatrix& vec = es.eigenvectors();
    std::vector<QMatrix> basis;
    std::vector<double> values;
    for (Eigen::Index c = 0; c < vec.cols() && basis.size() < n; ++c) {
      QMatrix v = quaternion_vector_from_complex(vec.col(c));
      for (const auto& w : basis) project_out(v, w);
      const double nv = v.frobenius_norm();
      if (nv < 0.5) continue;  // partner of an already captured quaternionic direction
      v = v * Quaternion(1.0 / nv);
      // Fix the free unit right factor: largest entry becomes real positive.
      std::size_t big = 0;
      for (std::size_t r = 1; r < n; ++r)
        if (v(r, 0).norm() > v(big, 0).norm()) big = r;
      const Quaternion phase = v(big, 0).conj() / v(big, 0).norm();
      v = v * phase;
      basis.push_back(v);
      values.push_back(lam(c));
    }
    if (basis.size() != n) throw Error(ErrorKind::NotHermitian, "failed to recover a quaternionic eigenbasis");
    for (std::size_t k = 0; k < n; ++k) {
      out.eigenvalues[k] = values[k];
      out.unitary.set_block(0, k, basis[k]);
    }
  }

  double spectral_norm = 0.0;
  for (double e : out.eigenvalues) spectral_norm = std::max(spectral_norm, std::abs(e));
  const double tol = tol_sig.value_or(1e-8 * spectral_norm);

  std::vector<std::size_t> pos, neg, zer;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = out.eigenvalues[k];
    if (e > tol) pos.push_back(k);
    else if (e < -tol) neg.push_back(k);
    else zer.push_back(k);
  }
  out.signature = {static_cast<int>(pos.size()), static_cast<int>(neg.size()), static_cast<int>(zer.size())};

  out.congruence = QMatrix(n, n);
  std::size_t col = 0;
  auto place = [&](const std::vector<std::size_t>& idx, bool scale_by_root) {
    for (std::size_t k : idx) {
      const double f = scale_by_root ? std::sqrt(std::abs(out.eigenvalues[k])) : 1.0;
      out.congruence.set_block(0, col++, out.unitary.col(k) * Quaternion(f));
    }
  };
  std::reverse(pos.begin(), pos.end());
  place(pos, true);
  place(neg, true);
  place(zer, false);
  return out;
}

std::vector<SphereMultiplicity> cluster_spheres(std::span<const std::complex<double>> eigenvalues,
                                                double cluster_tol) {
  struct Cluster {
    double re_sum = 0.0;
    double im_sum = 0.0;
    int count = 0;
    Sphere mean() const { return {re_sum / count, im_sum / count}; }
  };
  std::vector<Cluster> clusters;
  for (const auto& lam : eigenvalues) {
    const Sphere s{lam.real(), std::abs(lam.imag())};
    const double tol = cluster_tol * (1.0 + std::abs(lam));
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
      const Sphere m = c.mean();
      return std::abs(m.re - s.re) <= tol && std::abs(m.im_mag - s.im_mag) <= tol;
    });
    if (it == clusters.end()) {
      clusters.push_back({s.re, s.im_mag, 1});
    } else {
      it->re_sum += s.re;
      it->im_sum += s.im_mag;
      ++it->count;
    }
  }
  std::vector<SphereMultiplicity> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) out.push_back({c.mean(), (c.count + 1) / 2});
  std::sort(out.begin(), out.end(), [](const SphereMultiplicity& a, const SphereMultiplicity& b) {
    return a.sphere.re != b.sphere.re ? a.sphere.re < b.sphere.re : a.sphere.im_mag < b.sphere.im_mag;
  });
  return out;
}

std::vector<SphereMultiplicity> right_eigen_spheres(const QMatrix& t, double cluster_tol) {
  if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "right_eigen_spheres needs a square matrix");
  if (t.rows() == 0) return {};
  Eigen::ComplexEigenSolver<CMatrix> es(complex_adjoint(t), /*computeEigenvectors=*/false);
  const Eigen::VectorXcd& ev = es.eigenvalues();
  std::vector<std::complex<double>> lam(ev.data(), ev.data() + ev.size());
  return cluster_spheres(lam, cluster_tol);
}

bool same_sphere_lists(std::vector<SphereMultiplicity> a, std::vector<SphereMultiplicity> b, double cluster_tol) {
  for (const auto& sa : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const SphereMultiplicity& sb) {
      return same_sphere(sa.sphere, sb.sphere, cluster_tol);
    });
    if (it == b.end() || it->multiplicity != sa.multiplicity) return false;
    b.erase(it);
  }
  return b.empty();
}

std::vector<RightEigenpair> right_eigenpairs(const QMatrix& t) {
  if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "right_eigenpairs needs a square matrix");
  const std::size_t n = t.rows();
  Eigen::ComplexEigenSolver<CMatrix> es(complex_adjoint(t));
  struct Candidate {
    std::complex<double> lam;
    QMatrix v;
  };
  std::vector<Candidate> cand;
  for (Eigen::Index c = 0; c < es.eigenvalues().size(); ++c) {
    std::complex<double> lam = es.eigenvalues()(c);
    QMatrix v = quaternion_vector_from_complex(es.eigenvectors().col(c));
    if (lam.imag() < 0.0) {
      // T (v j) = v lam j = (v j) conj(lam)
      v = v * Quaternion::j();
      lam = std::conj(lam);
    }
    cand.push_back({lam, v * Quaternion(1.0 / v.frobenius_norm())});
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
    return a.lam.real() != b.lam.real() ? a.lam.real() < b.lam.real() : a.lam.imag() < b.lam.imag();
  });

  // Keep the original eigenvectors; an orthonormal shadow basis only decides independence.
  std::vector<RightEigenpair> out;
  std::vector<QMatrix> shadow;
  for (const auto& c : cand) {
    QMatrix r = c.v;
    for (const auto& w : shadow) project_out(r, w);
    const double nr = r.frobenius_norm();
    if (nr < 1e-6) continue;
    shadow.push_back(r * Quaternion(1.0 / nr));
    out.push_back({Quaternion::from_complex_pair(c.lam, 0.0), c.v});
    if (out.size() == n) break;
  }
  return out;
}

QMatrix char_operator(const QMatrix& t, const Quaternion& s) {
  if (!t.is_square()) throw Error(ErrorKind::ShapeMismatch, "char_operator needs a square matrix");
  QMatrix q = t * t - (2.0 * s.re()) * t;
  const double s2 = s.norm2();
  for (std::size_t k = 0; k < t.rows(); ++k) q(k, k) += Quaternion(s2);
  return q;
}

double s_eigencheck(const QMatrix& t, const QMatrix& v, const Quaternion& s) {
  const double nv = v.frobenius_norm();
  if (nv == 0.0) throw Error(ErrorKind::ZeroVector, "s_eigencheck needs a nonzero vector");
  return (char_operator(t, s) * v).frobenius_norm() / nv;
}

QMatrix solve(const QMatrix& m, const QMatrix& rhs) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "solve needs a square matrix");
  if (m.rows() != rhs.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: rhs row count differs");
  if (m.rows() == 0) return rhs;
  Eigen::FullPivLU<CMatrix> lu(complex_adjoint(m));
  lu.setThreshold(1e-12);
  if (lu.rank() < lu.rows()) throw Error(ErrorKind::Singular, "matrix is singular at relative tolerance 1e-12");
  return from_complex_adjoint(lu.solve(complex_adjoint(rhs)));
}

QMatrix inverse(const QMatrix& m) { return solve(m, QMatrix::identity(m.rows())); }

std::vector<double> singular_values(const QMatrix& m) {
  if (m.empty()) return {};
  Eigen::JacobiSVD<CMatrix> svd(complex_adjoint(m));
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<double> out;
  for (Eigen::Index k = 0; k < sv.size(); k += 2) out.push_back(sv(k));
  return out;
}

std::size_t rank(const QMatrix& m, double rel_tol) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > rel_tol * sv.front(); }));
}

QMatrix orthonormal_basis(const QMatrix& m, double rel_tol, std::size_t max_cols) {
  std::vector<QMatrix> cols;
  double biggest = 0.0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cols.push_back(m.col(c));
    biggest = std::max(biggest, std::sqrt(column_norm2(m, c)));
  }
  std::vector<QMatrix> basis;
  while (!cols.empty() && basis.size() < std::min(m.rows(), max_cols)) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double nk = cols[k].frobenius_norm();
      if (nk > best_norm) { best_norm = nk; best = k; }
    }
    if (best_norm <= rel_tol * biggest || best_norm == 0.0) break;
    QMatrix w = cols[best] * Quaternion(1.0 / best_norm);
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(best));
    // Two passes keep the basis orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) project_out(w, b);
      w = w * Quaternion(1.0 / w.frobenius_norm());
    }
    for (auto& c : cols) project_out(c, w);
    basis.push_back(w);
  }
  QMatrix out(m.rows(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out.set_block(0, k, basis[k]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

}  // namespace qslice

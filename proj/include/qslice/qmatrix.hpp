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

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qslice/quaternion.hpp"

namespace qslice {

using CMatrix = Eigen::MatrixXcd;

/// Dense row-major matrix over the quaternions.
///
/// Vectors are QMatrix columns (n x 1). Scalars act on the left of a matrix
/// via `q * M` (entrywise q*m_ij) and on the right via `M * q` (m_ij*q); these
/// differ and the distinction is load-bearing throughout the library.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static QMatrix diag(std::span<const Quaternion> d);
  static QMatrix diag(std::initializer_list<Quaternion> d);
  static QMatrix column(std::span<const Quaternion> v);
  static QMatrix scalar(const Quaternion& q) { return {1, 1, {q}}; }
  /// Standard basis vector e_k of length n.
  static QMatrix unit_vector(std::size_t n, std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Quaternion> entries() const { return entries_; }

  QMatrix adjoint() const;
  QMatrix conj() const;
  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);
  QMatrix col(std::size_t c) const { return block(0, c, rows_, 1); }

  double frobenius_norm() const;
  double max_abs() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> entries_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Quaternion& q, const QMatrix& m);
QMatrix operator*(const QMatrix& m, const Quaternion& q);
QMatrix operator*(double s, const QMatrix& m);

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

/// Frobenius norm; the norm used for every residual in the library.
inline double norm(const QMatrix& m) { return m.frobenius_norm(); }

/// Complex adjoint chi(M): with M = M1 + M2 j, returns [[M1, M2], [-conj(M2), conj(M1)]].
/// A *-homomorphism into 2r x 2c complex matrices.
CMatrix complex_adjoint(const QMatrix& m);

/// Inverse of complex_adjoint on its image; averages the redundant blocks.
QMatrix from_complex_adjoint(const CMatrix& c);

/// Quaternion vector v = u1 + (-conj(u2)) j from a complex vector u = [u1; u2] of
/// length 2n. If chi(T) u = u lambda then T v = v lambda.
QMatrix quaternion_vector_from_complex(const Eigen::VectorXcd& u);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Spectral data of a Hermitian quaternionic matrix.
struct HermSpectrum {
  std::vector<double> eigenvalues;  // ascending, one per quaternionic dimension
  Signature signature;
  QMatrix unitary;     // H = U diag(eigenvalues) U*, columns in ascending order
  QMatrix congruence;  // H = V diag(I_t, -I_r, 0_s) V*, V invertible
};

/// Eigenstructure of H = H*. Eigenvalues within `tol_sig` of zero count as
/// zero; the default is 1e-8 * ||H||_2. Throws NotHermitian.
HermSpectrum herm_eig(const QMatrix& h, std::optional<double> tol_sig = std::nullopt);

/// diag(I_t, -I_r, 0_s).
QMatrix signature_matrix(const Signature& sig);

/// Throws BadSignatureMatrix unless sigma is a Hermitian involution.
void require_signature_matrix(const QMatrix& sigma, const char* name);

struct SphereMultiplicity {
  Sphere sphere;
  int multiplicity = 0;
};

/// Default clustering tolerance for grouping chi-eigenvalues into spheres.
inline constexpr double kClusterTol = 1e-8;

/// Right spectrum of T as 2-spheres with multiplicities, from the eigenvalues of
/// chi(T). Sorted by (re, im_mag).
std::vector<SphereMultiplicity> right_eigen_spheres(const QMatrix& t, double cluster_tol = kClusterTol);

/// Group a list of complex eigenvalues (of some chi(T)) into spheres.
std::vector<SphereMultiplicity> cluster_spheres(std::span<const std::complex<double>> eigenvalues,
                                                double cluster_tol = kClusterTol);

/// Sphere lists equal up to clustering tolerance (order-insensitive, multiplicities must match).
bool same_sphere_lists(std::vector<SphereMultiplicity> a, std::vector<SphereMultiplicity> b,
                       double cluster_tol = kClusterTol);

struct RightEigenpair {
  Quaternion value;  // lies in C_i with nonnegative i-component
  QMatrix vector;    // n x 1, unit norm, T v = v value
};

/// Right eigenpairs reconstructed from eigenvectors of chi(T); one per
/// quaternionic dimension when T is diagonalizable.
std::vector<RightEigenpair> right_eigenpairs(const QMatrix& t);

/// Q_s(T) = T^2 - 2 Re(s) T + |s|^2 I.
QMatrix char_operator(const QMatrix& t, const Quaternion& s);

/// ||Q_s(T) v|| / ||v||. Throws ZeroVector.
double s_eigencheck(const QMatrix& t, const QMatrix& v, const Quaternion& s);

/// Solves M X = rhs through chi(M). Throws Singular when chi(M) is rank
/// deficient at relative threshold 1e-12.
QMatrix solve(const QMatrix& m, const QMatrix& rhs);
QMatrix inverse(const QMatrix& m);

/// Singular values of M (each once, descending). These are the singular values of chi(M) with
/// the pairing removed.
std::vector<double> singular_values(const QMatrix& m);

/// Quaternionic rank: singular values above rel_tol * sigma_max.
std::size_t rank(const QMatrix& m, double rel_tol);

/// Orthonormal basis (columns) of the right span of the columns of m, by
/// column-pivoted Gram-Schmidt; stops when the largest residual falls below
/// rel_tol * (largest column norm).
QMatrix orthonormal_basis(const QMatrix& m, double rel_tol,
                          std::size_t max_cols = static_cast<std::size_t>(-1));

/// v* u for column vectors.
Quaternion inner(const QMatrix& u, const QMatrix& v);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace qslice

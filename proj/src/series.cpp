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

#include "qslice/series.hpp"

#include <algorithm>

#include "qslice/error.hpp"

namespace qslice {

namespace {

void require_same_side(const SliceSeries& f, const SliceSeries& g, const char* op) {
  if (f.side() != g.side()) throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": mixing left and right series");
}

void require_scalar(const SliceSeries& f, const char* op) {
  if (!f.is_scalar()) throw Error(ErrorKind::ShapeMismatch, std::string(op) + " needs a scalar (1x1) series");
}

}  // namespace

SliceSeries::SliceSeries(std::vector<QMatrix> coeff, SeriesSide side) : coeff_(std::move(coeff)), side_(side) {
  if (coeff_.empty()) throw Error(ErrorKind::ShapeMismatch, "series needs at least one coefficient");
  for (const auto& c : coeff_) {
    if (c.rows() != coeff_.front().rows() || c.cols() != coeff_.front().cols()) {
      throw Error(ErrorKind::ShapeMismatch, "series coefficients must share a shape");
    }
  }
}

SliceSeries SliceSeries::polynomial(std::vector<QMatrix> coeff, int degree, SeriesSide side) {
  if (coeff.empty()) throw Error(ErrorKind::ShapeMismatch, "polynomial needs at least one coefficient");
  if (static_cast<int>(coeff.size()) > degree + 1) coeff.resize(static_cast<std::size_t>(degree) + 1);
  const QMatrix zero(coeff.front().rows(), coeff.front().cols());
  coeff.resize(static_cast<std::size_t>(degree) + 1, zero);
  return SliceSeries(std::move(coeff), side);
}

SliceSeries SliceSeries::scalar_polynomial(std::vector<Quaternion> coeff, int degree) {
  std::vector<QMatrix> m;
  m.reserve(coeff.size());
  for (const auto& q : coeff) m.push_back(QMatrix::scalar(q));
  return polynomial(std::move(m), degree);
}

SliceSeries SliceSeries::truncated(int degree) const {
  if (degree > this->degree()) throw Error(ErrorKind::ShapeMismatch, "cannot extend a truncated series");
  return SliceSeries(std::vector<QMatrix>(coeff_.begin(), coeff_.begin() + degree + 1), side_);
}

SliceSeries operator+(const SliceSeries& f, const SliceSeries& g) {
  require_same_side(f, g, "operator+");
  const int d = std::min(f.degree(), g.degree());
  std::vector<QMatrix> c;
  for (int n = 0; n <= d; ++n) c.push_back(f[n] + g[n]);
  return SliceSeries(std::move(c), f.side());
}

SliceSeries operator-(const SliceSeries& f, const SliceSeries& g) {
  require_same_side(f, g, "operator-");
  const int d = std::min(f.degree(), g.degree());
  std::vector<QMatrix> c;
  for (int n = 0; n <= d; ++n) c.push_back(f[n] - g[n]);
  return SliceSeries(std::move(c), f.side());
}

SliceSeries operator*(const Quaternion& q, const SliceSeries& f) {
  std::vector<QMatrix> c;
  for (const auto& a : f.coefficients()) c.push_back(q * a);
  return SliceSeries(std::move(c), f.side());
}

SliceSeries operator*(const SliceSeries& f, const Quaternion& q) {
  std::vector<QMatrix> c;
  for (const auto& a : f.coefficients()) c.push_back(a * q);
  return SliceSeries(std::move(c), f.side());
}

SliceSeries star_mul(const SliceSeries& f, const SliceSeries& g) {
  require_same_side(f, g, "star_mul");
  if (f.cols() != g.rows()) throw Error(ErrorKind::ShapeMismatch, "star_mul: inner dimensions differ");
  const int d = std::min(f.degree(), g.degree());
  std::vector<QMatrix> c;
  c.reserve(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    QMatrix acc(f.rows(), g.cols());
    for (int r = 0; r <= n; ++r) acc += f[r] * g[n - r];
    c.push_back(std::move(acc));
  }
  return SliceSeries(std::move(c), f.side());
}

SliceSeries series_conj(const SliceSeries& f) {
  std::vector<QMatrix> c;
  for (const auto& a : f.coefficients()) c.push_back(a.conj());
  return SliceSeries(std::move(c), f.side());
}

SliceSeries series_sym(const SliceSeries& f) {
  require_scalar(f, "series_sym");
  return star_mul(series_conj(f), f);
}

std::vector<double> real_series_reciprocal(std::span<const double> c, int degree) {
  if (c.empty() || c[0] == 0.0) throw Error(ErrorKind::NotInvertibleAtZero, "real series vanishes at 0");
  std::vector<double> b(static_cast<std::size_t>(degree) + 1, 0.0);
  b[0] = 1.0 / c[0];
  for (int n = 1; n <= degree; ++n) {
    double acc = 0.0;
    for (int r = 1; r <= n && r < static_cast<int>(c.size()); ++r) acc += c[r] * b[n - r];
    b[n] = -acc / c[0];
  }
  return b;
}

SliceSeries star_inverse(const SliceSeries& f) {
  require_scalar(f, "star_inverse");
  const Quaternion& a0 = f.scalar(0);
  double scale = 0.0;
  for (int n = 0; n <= f.degree(); ++n) scale = std::max(scale, f.scalar(n).norm());
  if (a0.norm() <= 1e-13 * (1.0 + scale)) {
    throw Error(ErrorKind::NotInvertibleAtZero, "series vanishes at the origin");
  }
  const SliceSeries fs = series_sym(f);
  std::vector<double> c;
  for (int n = 0; n <= fs.degree(); ++n) c.push_back(fs.scalar(n).x0);
  const std::vector<double> b = real_series_reciprocal(c, f.degree());
  // (f^s)^{-1} has real coefficients, so multiplying it into f^c is a plain convolution.
  const SliceSeries fc = series_conj(f);
  std::vector<QMatrix> out;
  for (int n = 0; n <= f.degree(); ++n) {
    Quaternion acc;
    for (int r = 0; r <= n; ++r) acc += fc.scalar(n - r) * b[r];
    out.push_back(QMatrix::scalar(acc));
  }
  return SliceSeries(std::move(out), f.side());
}

SliceSeries formal_star_inverse(const SliceSeries& f) {
  if (f.rows() != f.cols()) throw Error(ErrorKind::ShapeMismatch, "formal_star_inverse needs square coefficients");
  QMatrix a0inv;
  try {
    a0inv = inverse(f[0]);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular || e.kind() == ErrorKind::ZeroDivision) {
      throw Error(ErrorKind::NotInvertibleAtZero, "constant coefficient is singular");
    }
    throw;
  }
  std::vector<QMatrix> b{a0inv};
  for (int n = 1; n <= f.degree(); ++n) {
    QMatrix acc(f.rows(), f.cols());
    for (int r = 1; r <= n; ++r) acc += f[r] * b[static_cast<std::size_t>(n - r)];
    b.push_back(-(a0inv * acc));
  }
  return SliceSeries(std::move(b), f.side());
}

QMatrix eval(const SliceSeries& f, const Quaternion& p) {
  QMatrix acc = f[f.degree()];
  for (int n = f.degree() - 1; n >= 0; --n) {
    acc = f.side() == SeriesSide::Left ? f[n] + p * acc : f[n] + acc * p;
  }
  return acc;
}

Quaternion eval_scalar(const SliceSeries& f, const Quaternion& p) {
  require_scalar(f, "eval_scalar");
  return eval(f, p)(0, 0);
}

SliceSeries star_resolvent(const QMatrix& a, int degree) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "star_resolvent needs a square matrix");
  std::vector<QMatrix> c{QMatrix::identity(a.rows())};
  for (int n = 1; n <= degree; ++n) c.push_back(c.back() * a);
  return SliceSeries(std::move(c));
}

QMatrix star_resolvent_eval(const QMatrix& a, const Quaternion& p) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "star_resolvent_eval needs a square matrix");
  const std::size_t n = a.rows();
  const QMatrix id = QMatrix::identity(n);
  const QMatrix q = p.norm2() * (a * a) - (2.0 * p.re()) * a + id;
  // q commutes with A but not with the left scalar conj(p), so the scalar goes outside.
  const QMatrix y = solve(q, id);
  return y - p.conj() * (a * y);
}

SliceSeries adjoint_series(const SliceSeries& f) {
  std::vector<QMatrix> c;
  for (const auto& a : f.coefficients()) c.push_back(a.adjoint());
  return SliceSeries(std::move(c), f.side() == SeriesSide::Left ? SeriesSide::Right : SeriesSide::Left);
}

double max_coeff_diff(const SliceSeries& f, const SliceSeries& g) {
  const int d = std::min(f.degree(), g.degree());
  double m = 0.0;
  for (int n = 0; n <= d; ++n) m = std::max(m, (f[n] - g[n]).max_abs());
  return m;
}

}  // namespace qslice

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

#include "qslice/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qslice::gen {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Quaternion quaternion(Rng& rng, double scale) {
  const double a = normal(rng);
  const double b = normal(rng);
  const double c = normal(rng);
  const double d = normal(rng);
  return Quaternion(a, b, c, d) * scale;
}

Quaternion quaternion_with_modulus(Rng& rng, double modulus) {
  Quaternion q;
  do {
    q = quaternion(rng);
  } while (q.norm() < 1e-6);
  return q * (modulus / q.norm());
}

UnitImaginary unit_imaginary(Rng& rng) {
  for (;;) {
    const double a = normal(rng);
    const double b = normal(rng);
    const double c = normal(rng);
    if (std::sqrt(a * a + b * b + c * c) > 1e-6) return {a, b, c};
  }
}

Quaternion in_ball(Rng& rng, double radius) {
  return quaternion_with_modulus(rng, radius * std::pow(uniform(rng, 0.0, 1.0), 0.25));
}

QMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = quaternion(rng, scale);
  }
  return m;
}

QMatrix matrix_with_norm(Rng& rng, std::size_t rows, std::size_t cols, double norm2) {
  const QMatrix m = matrix(rng, rows, cols);
  return (norm2 / singular_values(m).front()) * m;
}

SeparatedCase separated_matrix(Rng& rng, std::size_t n) {
  constexpr int kLevels = 6;
  std::vector<int> level(n);
  // Force at least two occupied levels so the circle separates something.
  for (;;) {
    for (auto& l : level) l = uniform_int(rng, 0, kLevels - 1);
    if (n < 2) break;
    if (std::adjacent_find(level.begin(), level.end(), std::not_equal_to<>()) != level.end()) break;
  }
  std::vector<Quaternion> per_level;
  for (int k = 0; k < kLevels; ++k) per_level.push_back(quaternion_with_modulus(rng, 0.1 + 0.2 * k));
  SeparatedCase out;
  for (const int l : level) out.eigenvalues.push_back(per_level[static_cast<std::size_t>(l)]);
  // Well-conditioned similarity: I + G with ||G||_2 = 0.4.
  const QMatrix u = QMatrix::identity(n) + matrix_with_norm(rng, n, n, 0.4);
  out.t = u * QMatrix::diag(out.eigenvalues) * inverse(u);
  std::vector<int> used(level);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  if (used.size() < 2) {
    out.radius = 0.1 + 0.2 * used.front() + 0.1;
  } else {
    const auto cut = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(used.size()) - 2));
    out.radius = 0.1 + 0.2 * used[cut] + 0.1;
  }
  return out;
}

SliceSeries scalar_series(Rng& rng, int degree) {
  std::vector<Quaternion> c{quaternion_with_modulus(rng, uniform(rng, 1.0, 2.0))};
  for (int n = 1; n <= degree; ++n) c.push_back(quaternion(rng, std::pow(0.5, n)));
  return SliceSeries::scalar_polynomial(std::move(c), degree);
}

SliceSeries matrix_series(Rng& rng, std::size_t rows, std::size_t cols, int degree) {
  std::vector<QMatrix> c;
  for (int n = 0; n <= degree; ++n) c.push_back(matrix(rng, rows, cols));
  return SliceSeries(std::move(c));
}

}  // namespace qslice::gen

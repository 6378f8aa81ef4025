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

#include <cstdint>
#include <random>
#include <vector>

#include "qslice/qmatrix.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/series.hpp"

namespace qslice::gen {

/// Single source of randomness for suites and tests.
using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive bounds
double normal(Rng& rng);

/// Standard normal components scaled by `scale`.
Quaternion quaternion(Rng& rng, double scale = 1.0);
/// Uniform direction times the given modulus.
Quaternion quaternion_with_modulus(Rng& rng, double modulus);
UnitImaginary unit_imaginary(Rng& rng);
/// Uniform in the open ball of the given radius.
Quaternion in_ball(Rng& rng, double radius);

QMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0);
/// Random matrix rescaled so that its largest singular value is `norm2`.
QMatrix matrix_with_norm(Rng& rng, std::size_t rows, std::size_t cols, double norm2);

/// T = U diag(l) U^{-1} whose right-eigenvalue moduli sit on the grid 0.1 + 0.2 k,
/// k = 0..5, so distinct spheres differ in modulus by at least 0.2. Eigenvalues on a
/// shared level are equal. `radius` is a circle (center 0) halfway between two
/// occupied levels, so both sides of it hold spectrum.
struct SeparatedCase {
  QMatrix t;
  std::vector<Quaternion> eigenvalues;
  double radius = 0.0;
};
SeparatedCase separated_matrix(Rng& rng, std::size_t n);

/// Scalar series with |a_0| in [1, 2] and a_n of size 0.5^n, so its slice
/// reciprocal stays well scaled.
SliceSeries scalar_series(Rng& rng, int degree);
/// Matrix series with standard normal coefficients.
SliceSeries matrix_series(Rng& rng, std::size_t rows, std::size_t cols, int degree);

}  // namespace qslice::gen

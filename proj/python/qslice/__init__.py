# Copyright 2026 The qslice Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Slice hyperholomorphic Schur analysis over the quaternions.

Quaternions are arrays (x0, x1, x2, x3). Matrices have shape (rows, cols, 4),
or (rows, cols) for real data. Series have shape (degree + 1, rows, cols, 4),
or (degree + 1, 4) for scalar series.
"""

from ._qslice import (
    QsliceError,
    blaschke_point,
    blaschke_product,
    eval_series,
    krein_langer_factor,
    matmul,
    neg_squares,
    qinv,
    qmul,
    realization_eval,
    realization_series,
    realize,
    riesz_projector,
    right_eigen_spheres,
    s_resolvent_left,
    s_resolvent_right,
    spectral_split,
    star_inverse,
    star_mul,
    suite_names,
    verify,
)

__all__ = [
    "QsliceError",
    "blaschke_point",
    "blaschke_product",
    "eval_series",
    "krein_langer_factor",
    "matmul",
    "neg_squares",
    "qinv",
    "qmul",
    "realization_eval",
    "realization_series",
    "realize",
    "riesz_projector",
    "right_eigen_spheres",
    "s_resolvent_left",
    "s_resolvent_right",
    "spectral_split",
    "star_inverse",
    "star_mul",
    "suite_names",
    "verify",
]

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

import numpy as np
import pytest

import qslice

I = np.array([0.0, 1.0, 0.0, 0.0])
J = np.array([0.0, 0.0, 1.0, 0.0])
K = np.array([0.0, 0.0, 0.0, 1.0])


def quat_matrix(entries):
    return np.array(entries, dtype=float)


def test_quaternion_product():
    np.testing.assert_array_equal(qslice.qmul(I, J), K)
    np.testing.assert_array_equal(qslice.qmul(J, I), -K)
    np.testing.assert_allclose(qslice.qinv([1.0, 1.0, 0.0, 0.0]), [0.5, -0.5, 0.0, 0.0])


def test_zero_division_is_reported():
    with pytest.raises(qslice.QsliceError) as info:
        qslice.qinv([0.0, 0.0, 0.0, 0.0])
    assert info.value.kind == "ZeroDivision"


def test_right_spectrum_of_imaginary_units():
    t = np.zeros((2, 2, 4))
    t[0, 0] = I
    t[1, 1] = J
    spheres = qslice.right_eigen_spheres(t)
    assert len(spheres) == 1
    assert spheres[0]["multiplicity"] == 2
    assert spheres[0]["im_mag"] == pytest.approx(1.0)


def test_projector_and_split():
    t = np.diag([1.0, 3.0])
    p = qslice.riesz_projector(t, center=1.0, radius=1.0)
    np.testing.assert_allclose(p[..., 0], np.diag([1.0, 0.0]), atol=1e-12)
    split = qslice.spectral_split(t, center=1.0, radius=1.0)
    assert split["union_matches"]
    assert split["inside"][0]["re"] == pytest.approx(1.0)
    assert split["outside"][0]["re"] == pytest.approx(3.0)


def test_resolvent_commuting_case():
    t = np.zeros((1, 1, 4))
    t[0, 0] = I
    r = qslice.s_resolvent_left(2.0, t)
    np.testing.assert_allclose(r[0, 0], [0.4, 0.2, 0.0, 0.0], atol=1e-15)


def test_star_product_and_inverse():
    f = np.array([[1.0, 0, 0, 0], I, [0, 0, 0, 0]])
    g = np.array([[1.0, 0, 0, 0], J, [0, 0, 0, 0]])
    fg = qslice.star_mul(f, g)
    np.testing.assert_array_equal(fg[2, 0, 0], K)
    inv = qslice.star_inverse(f)
    one = qslice.star_mul(f, inv)
    np.testing.assert_allclose(one[:, 0, 0, 0], [1.0, 0.0, 0.0], atol=1e-15)


def test_blaschke_point_real_zero():
    b = qslice.blaschke_point(0.5, degree=48)
    value = qslice.eval_series(b, 0.2)[0, 0, 0]
    assert value == pytest.approx((0.5 - 0.2) / (1 - 0.1), abs=1e-12)


def test_blaschke_product_vanishes_at_zeros():
    b = qslice.blaschke_product([0.5 * I, 0.5 * J])
    for z in (0.5 * I, 0.5 * J):
        assert np.abs(qslice.eval_series(b, z)).max() < 1e-10


def test_negative_squares():
    identity = np.zeros((17, 4))
    identity[1, 0] = 1.0
    assert qslice.neg_squares(identity, mu_max=8)["kappa"] == 0
    big = np.zeros((17, 4))
    big[0] = 2.0 * I
    ns = qslice.neg_squares(big, mu_max=4)
    assert ns["kappa"] == 5
    assert not ns["stabilized"]


def test_realization_roundtrip():
    a = np.diag([0.5, -0.25])
    c = np.array([[1.0, 1.0]])
    r = qslice.realize(a, c)
    assert r["congruence_residual"] < 1e-10
    assert r["stein_residual"] < 1e-12
    series = qslice.realization_series(r, degree=10)
    value = qslice.realization_eval(r, 0.3)
    np.testing.assert_allclose(qslice.eval_series(series, 0.3), value, atol=1e-6)


def test_krein_langer_factor_on_shifted_symbol():
    shift = {"A": np.zeros((1, 1)), "B": np.ones((1, 1)), "C": np.ones((1, 1)), "D": np.zeros((1, 1))}
    kl = qslice.krein_langer_factor(shift)
    assert kl["outside_dim"] == 0
    assert kl["kappa_original"]["kappa"] == 0


def test_verify_suite():
    report = qslice.verify("star", seed=42)
    assert report["passed"]
    assert {c["name"] for c in report["checks"]} >= {"associativity", "inverse_right"}
    assert "klfactor" in qslice.suite_names()
    with pytest.raises(qslice.QsliceError):
        qslice.verify("nope")


def test_sphere_of_modulus_one():
    on_sphere = {"A": quat_matrix([[[0.6, 0.8, 0, 0]]]), "B": np.ones((1, 1)), "C": np.ones((1, 1)),
                 "D": np.zeros((1, 1))}
    with pytest.raises(qslice.QsliceError) as info:
        qslice.krein_langer_factor(on_sphere)
    assert info.value.kind == "SpectrumOnUnitSphere"

# Copyright 2026 The dyadic-fht Authors
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

import cmath
from fractions import Fraction

import numpy as np
import pytest

import dyadicfht as df


def test_dyadic_lines():
    assert df.basic_line(3, x=4, i=0) == 1
    assert df.dyadic_line(3, x=3, t=7) == 3
    assert df.dyadic_line(3, x=4, t=6) == 3
    assert df.deviation_num(3, x=4, t=6) == -3
    assert df.deviation(3, x=4, t=6) == Fraction(-3, 7)
    assert df.rotl(3, x=0b100, i=1) == 0b001
    with pytest.raises(ValueError):
        df.dyadic_line(3, x=8, t=0)


def test_fht_matches_brute_force():
    rng = np.random.default_rng(7)
    img = rng.integers(0, 256, size=(16, 16)).astype(np.uint32)
    acc = df.fht_quadrant(img)
    n = img.shape[0]
    assert acc.shape == (n, 2 * n - 1)
    for t in (0, 3, 11, 15):
        for h in (-7, 0, 5):
            assert acc[t, h + n - 1] == df.brute_line_sum(img, t, h)
    # every pencil carries the whole image mass
    assert (acc.sum(axis=1) == img.sum()).all()
    assert len(df.fht_full(img)) == 4


def test_exact_statistics():
    m = df.moments(2)
    assert m["variance"] == Fraction(1, 36)
    assert m["mean"] == 0
    assert m["sum_num_sq"] == 4

    lo, hi, argmax = df.exhaustive_extrema(4)
    assert (lo, hi) == (-10, 10)
    assert df.deviation_num(4, x=argmax[0], t=argmax[1]) == 10

    tail = df.tail_fraction(12, "1")
    assert tail["fraction_ge"] < Fraction(1, 4)

    assert df.q_of_x(2, x=2) == Fraction(1, 3)

    hist = df.histogram(2, bins=3)
    assert [mass for _, mass in hist] == [
        Fraction(1, 8),
        Fraction(3, 4),
        Fraction(1, 8),
    ]


def test_spectral_report():
    rep = df.spectral_report(4)
    assert rep["sharp"]
    assert rep["hypercube_min_times4"] == 20
    assert rep["min_sym_eig"] == 5.0
    eigs = rep["eigenvalues"]
    assert any(abs(e - 15.0) < 1e-12 for e in eigs)


def test_characteristic_function():
    assert df.psi_exact(8, 0.0) == 1.0
    psi = df.psi_exact(8, 1.0)
    assert abs(psi.imag) < 1e-12
    assert abs(psi - cmath.exp(-1 / 96)) < 1e-3
    assert df.ks_distance(8) == pytest.approx(0.014769097456, abs=1e-9)
    assert df.ks_distance(4) > df.ks_distance(8)


def test_verify_quick_passes():
    ok, checks = df.verify("quick")
    assert ok, [c["name"] for c in checks if not c["pass"]]
    assert {c["name"] for c in checks} >= {"fht_oracle", "worst_case_bound"}

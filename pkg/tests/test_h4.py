"""Exact icosian arithmetic and the H4 reflection group."""

import random
from fractions import Fraction

import numpy as np
import pytest

from polyreal.errors import ClosureOverflow
from polyreal.groups import subgroup_generated
from polyreal.h4 import (
    GOLDEN_A,
    GOLDEN_B,
    QSqrt5,
    QuatQ5,
    QUAT_ONE,
    cross_check_600cell,
    icosian_group,
    icosians_json,
    root_system_h4,
    validate_120cell,
)


def test_golden_identities():
    a, b = GOLDEN_A, GOLDEN_B
    assert a + b == QSqrt5(-1)
    assert a * b == QSqrt5(-1)
    assert a * a + b * b == QSqrt5(3)
    assert abs(a.to_float() - (5 ** 0.5 - 1) / 2) < 1e-12
    assert QSqrt5(0, 1) * QSqrt5(0, 1) == QSqrt5(5)


def test_qsqrt5_arithmetic():
    rng = random.Random(1105)

    def rand():
        return QSqrt5(Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)),
                      Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)))

    for _ in range(60):
        u, v, w = rand(), rand(), rand()
        assert u * (v + w) == u * v + u * w
        assert (u - v) + v == u
        assert abs((u * v).to_float() - u.to_float() * v.to_float()) < 1e-9
        c = u.to_cyclo()
        assert abs(c.to_float().real - u.to_float()) < 1e-9
        assert abs(c.to_float().imag) < 1e-12
    assert QSqrt5(3).is_rational()
    assert not QSqrt5(3, 1).is_rational()


def test_quaternion_relations():
    i = QuatQ5(0, 1, 0, 0)
    j = QuatQ5(0, 0, 1, 0)
    k = QuatQ5(0, 0, 0, 1)
    assert i * j == k and j * i == -k
    assert j * k == i and k * j == -i
    assert i * i == -QUAT_ONE
    rng = random.Random(42)
    icos = icosian_group()
    for _ in range(30):
        x = icos[rng.randrange(120)]
        y = icos[rng.randrange(120)]
        assert (x * y).norm() == x.norm() * y.norm()
        assert (x * y).conj() == y.conj() * x.conj()


def test_roots_and_icosians():
    r1, r2, r3, r4 = root_system_h4()
    for r in (r1, r2, r3, r4):
        assert r.norm() == QSqrt5(1)
    assert (r1 * r2) * (r1 * r2) == r4
    icos = icosian_group()
    assert len(icos) == 120
    members = set(icos)
    for unit in (QUAT_ONE, QuatQ5(0, 1, 0, 0), QuatQ5(0, 0, 1, 0),
                 QuatQ5(0, 0, 0, 1)):
        assert unit in members and -unit in members
    rng = random.Random(20240817)
    for _ in range(40):
        x = icos[rng.randrange(120)]
        y = icos[rng.randrange(120)]
        assert x * y in members
        assert x.norm() == QSqrt5(1)


def test_closure_overflow():
    with pytest.raises(ClosureOverflow):
        icosian_group(cap=50)


def test_reflection_group(h4data):
    G = h4data.group
    assert G.order == 14400
    assert sorted(h4data.schlafli) == [3, 3, 5]
    assert len(np.unique(G.imgs[:, h4data.point_one])) == 120
    vertex = subgroup_generated(G, list(h4data.generator_indices[:3]))
    cell = subgroup_generated(G, list(h4data.generator_indices[1:]))
    assert vertex.order == 120
    assert cell.order == 24


def test_icosians_json():
    data = icosians_json()
    assert len(data) == 120
    for entry in data:
        assert len(entry["coords"]) == 4
        for (xs, ys), f in zip(entry["coords"], entry["float"]):
            v = QSqrt5(Fraction(xs), Fraction(ys))
            assert abs(v.to_float() - f) < 1e-9


def test_120cell_profile(h4data, cache):
    rep = validate_120cell(h4data, cache_dir=cache)
    assert rep["points"] == 600
    assert rep["n_layers"] == 36
    assert rep["profile"] == {
        "half_lines": 15,
        "m2_degrees": [16, 16, 48],
        "m3_degrees": [25, 36],
    }
    assert rep["cone"]["points"] == 600


def test_600cell_two_models(h4data, cache):
    rep = cross_check_600cell(h4data, cache_dir=cache)
    assert rep["cosines_match"] is True
    assert rep["points"] == 120
    assert rep["layer_sizes"] == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert len(rep["profile"]) == 9
    assert all(m == 1 for _, m in rep["profile"])

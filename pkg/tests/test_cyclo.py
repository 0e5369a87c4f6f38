import cmath
import math
from fractions import Fraction

import pytest

from polyreal.cyclo import (Cyclo, cyclotomic_coeffs, euler_phi,
                            is_algebraic_integer, reduce_power_vector)
from polyreal.errors import InvalidParams, OrderCapExceeded


def test_rational_fast_paths():
    x = Cyclo.rational(Fraction(3, 4))
    assert x.is_rational() and x.as_fraction() == Fraction(3, 4)
    assert (x + Cyclo.rational(Fraction(1, 4))).as_fraction() == 1
    assert Cyclo.zero().is_zero()
    assert str(Cyclo.one()) == "1"


def test_minimal_order_normalization():
    # a 6th root is stored at order 3; an even power of a 12th root too
    z6 = Cyclo.zeta(6, 1)
    assert z6.order == 3
    assert z6 == -(Cyclo.zeta(3, 1) ** 2)
    # zeta_12^2 = zeta_6, which normalizes down to order 3
    sq = Cyclo.zeta(12, 1) ** 2
    assert sq == Cyclo.zeta(6, 1) and sq.order == 3
    # full rational collapse
    s = sum((Cyclo.zeta(5, k) for k in range(1, 5)), Cyclo.zero())
    assert s == Cyclo.rational(-1)


def test_sqrt5_normal_form():
    r = Cyclo.sqrt5()
    assert r.order == 5 and r.den == 1
    assert r.nums == (-1, 0, -2, -2)
    assert abs(r.to_float().real - math.sqrt(5)) < 1e-12
    assert (r * r) == Cyclo.rational(5)


def test_golden_ratio_is_algebraic_integer():
    golden = (Cyclo.one() + Cyclo.sqrt5()) / 2
    assert golden.is_algebraic_integer()
    half = Cyclo.one() / 2
    assert not half.is_algebraic_integer()
    assert is_algebraic_integer(Cyclo.zeta(7, 3))


def test_arithmetic_property_loop():
    import random
    rng = random.Random(20240817)
    pool = [Cyclo.zeta(n, k) for n in (3, 4, 5, 8) for k in range(1, n)]
    pool += [Cyclo.rational(Fraction(rng.randint(-4, 4), rng.randint(1, 5)))
             for _ in range(6)]
    for _ in range(120):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + (-a) == Cyclo.zero()
        fa, fb = a.to_float(), b.to_float()
        assert abs((a * b).to_float() - fa * fb) < 1e-9
        assert abs((a + b).to_float() - (fa + fb)) < 1e-9


def test_inverse_and_division():
    for x in (Cyclo.zeta(5, 2) + Cyclo.rational(2), Cyclo.sqrt5(),
              Cyclo.zeta(8, 1) - Cyclo.rational(3)):
        assert x * x.inv() == Cyclo.one()
    with pytest.raises(ZeroDivisionError):
        Cyclo.zero().inv()


def test_galois_and_conjugation():
    z = Cyclo.zeta(7, 1)
    assert z.galois(2) == Cyclo.zeta(7, 2)
    assert z.conj() == Cyclo.zeta(7, 6)
    with pytest.raises(InvalidParams):
        z.galois(7)
    r = Cyclo.sqrt5()
    assert r.galois(2) == -r
    assert r.conj() == r
    assert r.is_real()
    assert not Cyclo.zeta(5, 1).is_real()


def test_power_vector_reduction_matches_naive():
    import random
    rng = random.Random(7)
    for n in (5, 8, 9, 12):
        vec = [rng.randint(-9, 9) for _ in range(2 * n)]
        fast = reduce_power_vector(n, vec, 1)
        slow = sum((Cyclo.zeta(n, k % n) * v for k, v in enumerate(vec)),
                   Cyclo.zero())
        assert fast == slow


def test_json_round_trip():
    x = (Cyclo.zeta(9, 2) + Cyclo.rational(Fraction(1, 3))) * Cyclo.zeta(4, 1)
    blob = x.to_json()
    assert Cyclo.from_json(blob) == x


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        Cyclo.zeta(361, 1) * Cyclo.zeta(360, 1)


def test_phi_and_cyclotomic_polynomials():
    assert euler_phi(1) == 1 and euler_phi(12) == 4
    assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_coeffs(5) == (1, 1, 1, 1, 1)

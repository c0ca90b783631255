import random
from fractions import Fraction

import pytest

from curvemat.scalars import GaussianRational, DualNumber, gq, gaussian_integer_divisors


def rand_gq(rng, span=6):
    return GaussianRational(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
    )


def test_conjugation_involution_and_norm():
    rng = random.Random(1)
    for _ in range(100):
        z = rand_gq(rng)
        assert z.conj().conj() == z
        n = z * z.conj()
        assert n.im == 0
        assert n.re == z.norm2()


def test_field_axioms_random_triples():
    rng = random.Random(2)
    for _ in range(500):
        a, b, c = rand_gq(rng), rand_gq(rng), rand_gq(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * (GaussianRational(1) / a) == 1


def test_division_and_pow():
    z = gq(1, 1)
    assert z * z == gq(0, 2)
    assert z ** 4 == gq(-4)
    assert gq(5) / gq(1, 2) == gq(1, -2)
    with pytest.raises(ZeroDivisionError):
        gq(1) / gq(0)


def test_mixed_int_fraction_arithmetic():
    z = gq(Fraction(1, 2), 3)
    assert z + 1 == gq(Fraction(3, 2), 3)
    assert 2 * z == gq(1, 6)
    assert z - Fraction(1, 2) == gq(0, 3)


def test_dual_numbers_are_square_zero():
    eps = DualNumber(0, 1)
    assert eps * eps == DualNumber(0, 0)
    x = DualNumber(gq(2), gq(1))
    y = DualNumber(gq(3), gq(5))
    assert x * y == DualNumber(gq(6), gq(13))
    assert (x * y) / y == x
    with pytest.raises(ZeroDivisionError):
        x / eps


def test_gaussian_integer_divisors():
    divs = gaussian_integer_divisors(gq(5))
    # 5 = (2+i)(2-i); divisors up to units include 1, 2+i, 2-i, 5
    assert gq(1) in divs
    assert gq(2, 1) in divs or gq(1, 2) in divs
    assert gq(5) in divs
    for d in divs:
        q = gq(5) / d
        assert q.re.denominator == 1 and q.im.denominator == 1

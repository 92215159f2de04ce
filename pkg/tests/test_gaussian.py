import random
from fractions import Fraction

import pytest

from rotinv import GaussianRational
from rotinv.gaussian import I, ONE, ZERO, i_power


def rand_gr(rnd):
    return GaussianRational(
        Fraction(rnd.randint(-6, 6), rnd.randint(1, 5)),
        Fraction(rnd.randint(-6, 6), rnd.randint(1, 5)),
    )


def test_i_squared():
    assert I * I == GaussianRational(-1)
    assert i_power(0) == ONE
    assert i_power(1) == I
    assert i_power(2) == GaussianRational(-1)
    assert i_power(3) == GaussianRational(0, -1)
    assert i_power(7) == i_power(3)
    assert i_power(-1) == i_power(3)


def test_ring_identities():
    rnd = random.Random(11)
    for _ in range(200):
        a, b, c = rand_gr(rnd), rand_gr(rnd), rand_gr(rnd)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert a - a == ZERO
        assert a * ONE == a
        assert a + ZERO == a


def test_division_and_pow():
    rnd = random.Random(12)
    for _ in range(100):
        a, b = rand_gr(rnd), rand_gr(rnd)
        if b.is_zero():
            continue
        assert (a / b) * b == a
        assert b ** 3 == b * b * b
        assert b ** 0 == ONE
        assert b ** -2 == ONE / (b * b)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conjugate_and_norm():
    z = GaussianRational(Fraction(3, 2), Fraction(-5, 7))
    zc = z.conjugate()
    prod = z * zc
    assert prod.im == 0
    assert prod.re == Fraction(3, 2) ** 2 + Fraction(5, 7) ** 2


def test_int_coercion():
    z = GaussianRational(2, 3)
    assert 1 + z == GaussianRational(3, 3)
    assert 2 * z == GaussianRational(4, 6)
    assert z - 2 == GaussianRational(0, 3)
    assert 6 / GaussianRational(0, 2) == GaussianRational(0, -3)


def test_hash_eq():
    a = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    b = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert a == b and hash(a) == hash(b)
    assert a != GaussianRational(1, 2)


def test_complex_conversion():
    z = GaussianRational(Fraction(1, 4), Fraction(-1, 2))
    assert complex(z) == 0.25 - 0.5j


@pytest.mark.parametrize(
    "text",
    ["0", "1", "-1", "3/7", "-2/9", "i", "-i", "2*i", "-5/3*i", "1+i",
     "1-i", "1/2-3/4*i", "-4+7/2*i"],
)
def test_str_round_trip(text):
    z = GaussianRational.from_string(text)
    assert str(z) == text
    assert GaussianRational.from_string(str(z)) == z


def test_str_forms():
    assert str(GaussianRational(0, 1)) == "i"
    assert str(GaussianRational(0, -1)) == "-i"
    assert str(GaussianRational(1, 1)) == "1+i"
    assert str(GaussianRational(Fraction(-1, 2), Fraction(3, 4))) == "-1/2+3/4*i"


def test_from_string_rejects_garbage():
    for bad in ["", "x", "1+", "i*i", "1 + + i"]:
        with pytest.raises(ValueError):
            GaussianRational.from_string(bad)

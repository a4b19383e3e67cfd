from fractions import Fraction

import numpy as np
import pytest

from src.errors import RingMismatchError, ScalarError
from src.scalars import (
    ComplexRational,
    Quaternion,
    Ring,
    check_finite,
    coerce_scalar,
    decode_scalar,
    encode_scalar,
    join_rings,
)


def test_complex_rational_product():
    assert ComplexRational(1, 2) * ComplexRational(3, -1) == ComplexRational(5, 5)


def test_complex_rational_inverse_and_conjugate():
    z = ComplexRational(Fraction(2, 3), -4)
    assert z * z.inverse() == ComplexRational(1)
    assert z * z.conjugate() == ComplexRational(z.norm2())
    with pytest.raises(ZeroDivisionError):
        ComplexRational(0).inverse()


def test_complex_rational_mixes_with_rationals():
    z = ComplexRational(1, 1)
    assert z + 1 == ComplexRational(2, 1)
    assert 2 * z == ComplexRational(2, 2)
    assert ComplexRational(3) == 3
    assert not ComplexRational(0)


def test_quaternion_units():
    i, j, k = (Quaternion.unit(x) for x in "ijk")
    assert i * j == k
    assert j * i == -k
    assert j * k == i
    assert k * i == j
    for u in (i, j, k):
        assert u * u == Quaternion(-1)
    assert i * j * k == Quaternion(-1)


def test_quaternion_conjugate_reverses_products(rng):
    def draw():
        return Quaternion(*(Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(4)))

    for _ in range(20):
        a, b = draw(), draw()
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()
        assert (a * b).norm2() == a.norm2() * b.norm2()


def test_quaternion_complex_model_is_multiplicative(rng):
    for _ in range(10):
        a = Quaternion(*(int(x) for x in rng.integers(-4, 5, size=4)))
        b = Quaternion(*(int(x) for x in rng.integers(-4, 5, size=4)))
        assert np.allclose((a * b).complex_matrix(), a.complex_matrix() @ b.complex_matrix())
        assert np.allclose(a.conjugate().complex_matrix(), a.complex_matrix().conj().T)


def test_quaternion_inverse():
    q = Quaternion(1, 2, -1, 3)
    assert q * q.inverse() == Quaternion(1)
    assert q / q == Quaternion(1)


def test_coerce_refuses_lossy_conversions():
    with pytest.raises(RingMismatchError):
        coerce_scalar(ComplexRational(1, 1), Ring.RATIONAL)
    with pytest.raises(RingMismatchError):
        join_rings(Ring.QUATERNION, Ring.COMPLEX_RATIONAL)
    assert coerce_scalar(Fraction(1, 2), Ring.COMPLEX_RATIONAL) == ComplexRational(Fraction(1, 2))


def test_non_finite_floats_are_rejected():
    with pytest.raises(ScalarError):
        check_finite(float("nan"))
    with pytest.raises(ScalarError):
        decode_scalar("inf", Ring.FLOAT)


def test_scalar_codec():
    q = Quaternion(Fraction(1, 3), 0, -2, 5)
    assert decode_scalar(encode_scalar(q), Ring.QUATERNION) == q
    z = ComplexRational(Fraction(-7, 2), 1)
    assert decode_scalar(encode_scalar(z), Ring.COMPLEX_RATIONAL) == z
    with pytest.raises(ScalarError):
        decode_scalar("not a number", Ring.RATIONAL)

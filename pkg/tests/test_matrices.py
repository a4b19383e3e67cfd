from fractions import Fraction

import numpy as np
import pytest

from src.errors import DimensionMismatchError, RingMismatchError
from src.matrices import Flavor, RepMatrix, classify_form
from src.scalars import ComplexRational, Quaternion, Ring

i_h, j_h, k_h = (Quaternion.unit(x) for x in "ijk")


def test_quaternion_products_keep_order():
    a = RepMatrix.from_rows([[i_h, 0], [0, j_h]])
    b = RepMatrix.from_rows([[j_h, 0], [0, i_h]])
    assert (a @ b).entries[0, 0] == k_h
    assert (b @ a).entries[0, 0] == -k_h


def test_conj_transpose_reverses_products():
    a = RepMatrix.from_rows([[i_h, j_h + 1], [k_h, Quaternion(2)]])
    b = RepMatrix.from_rows([[j_h, 0], [i_h - k_h, Quaternion(1, 1)]])
    assert (a @ b).conj_transpose() == b.conj_transpose() @ a.conj_transpose()


def test_complex_model_agrees_with_exact_product():
    a = RepMatrix.from_rows([[i_h, j_h + 1], [k_h, Quaternion(2)]])
    b = RepMatrix.from_rows([[j_h, 0], [i_h - k_h, Quaternion(1, 1)]])
    assert np.allclose((a @ b).to_numpy(), a.to_numpy() @ b.to_numpy())
    assert np.allclose(Flavor.QUATERNIONIC.apply(a).to_numpy(), Flavor.QUATERNIONIC.apply_numpy(a.to_numpy()))


def test_blocks():
    a = RepMatrix.from_rows([[1, 2], [3, 4]])
    d = RepMatrix.from_rows([[5, 6], [7, 8]])
    m = RepMatrix.block_diagonal(a, d)
    assert m.is_block_diagonal()
    assert m.block(0, 0) == a
    assert m.block(1, 1) == d
    assert m.block(0, 1).is_zero()
    with pytest.raises(DimensionMismatchError):
        RepMatrix.identity(3, Ring.RATIONAL).block(0, 0)


def test_operands_must_agree():
    with pytest.raises(DimensionMismatchError):
        RepMatrix.identity(2, Ring.RATIONAL) @ RepMatrix.identity(3, Ring.RATIONAL)
    with pytest.raises(RingMismatchError):
        RepMatrix.identity(2, Ring.RATIONAL) @ RepMatrix.identity(2, Ring.COMPLEX_RATIONAL)
    with pytest.raises(DimensionMismatchError):
        RepMatrix.from_rows([[1, 2], [3]])


def test_scalar_multiple_of_identity():
    assert RepMatrix.diagonal([Fraction(3), Fraction(3)]).scalar_multiple_of_identity() == 3
    assert RepMatrix.diagonal([1, -1]).scalar_multiple_of_identity() is None


def test_form_flags_of_the_hyperbolic_metric():
    form = classify_form(RepMatrix.diagonal([1, -1]))
    assert form.is_symmetric and form.trace_zero
    assert form.square_sign == 1
    assert not form.is_identity


def test_form_flags_of_the_symplectic_unit():
    j = RepMatrix.from_rows([[0, 1], [-1, 0]])
    form = classify_form(j)
    assert form.is_skew and not form.is_symmetric
    assert form.square_sign == -1
    assert form.is_unitary_like


def test_form_flags_over_the_quaternions():
    form = classify_form(RepMatrix.diagonal([i_h, i_h]))
    assert form.is_anti_self_adjoint
    assert not form.is_self_adjoint
    assert form.square_sign == -1

    form = classify_form(RepMatrix.diagonal([Quaternion(1), Quaternion(-1)]))
    assert form.is_self_adjoint and form.trace_zero


def test_form_flags_with_complex_entries():
    m = RepMatrix.from_rows([[0, ComplexRational(0, 1)], [ComplexRational(0, -1), 0]])
    form = classify_form(m)
    assert form.is_self_adjoint
    assert form.is_skew
    assert form.square_sign == 1


def test_dict_form():
    m = RepMatrix.from_rows([[i_h, Quaternion(Fraction(1, 2))], [0, k_h]])
    assert RepMatrix.from_dict(m.to_dict()) == m

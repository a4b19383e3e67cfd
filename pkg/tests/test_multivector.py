from fractions import Fraction

import pytest

from src.errors import GradeRangeError, RingMismatchError, SignatureError
from src.multivector import (
    Multivector,
    Signature,
    blade_mask,
    blade_product,
    inverse_sign,
    random_sparse,
    square_sign,
)
from src.scalars import ComplexRational, Ring
from tests.conftest import push_symbols, small_signatures


@pytest.mark.parametrize("sig", small_signatures(4), ids=str)
def test_blade_product_matches_symbol_pushing(sig):
    for a in range(sig.dimension):
        for b in range(sig.dimension):
            assert blade_product(a, b, sig) == push_symbols(a, b, sig)


def test_generators_square_to_the_metric():
    sig = Signature(2, 3)
    for a in range(1, sig.n + 1):
        e = Multivector.vector(sig, a)
        assert e * e == Multivector.scalar(sig, sig.metric(a))
    e1, e2 = Multivector.vector(sig, 1), Multivector.vector(sig, 2)
    assert e1 * e2 == -(e2 * e1)


def test_blade_square_and_inverse_signs():
    sig = Signature(1, 2)
    for mask in range(sig.dimension):
        blade = Multivector.blade(sig, mask)
        assert blade * blade == Multivector.scalar(sig, square_sign(mask, sig))
        inverse = Multivector.blade(sig, mask, inverse_sign(mask, sig))
        assert blade * inverse == Multivector.scalar(sig, 1)


@pytest.mark.parametrize("sig", [Signature(3, 0), Signature(1, 2), Signature(2, 2)], ids=str)
def test_product_is_associative(sig, rng):
    for _ in range(10):
        u, v, w = (random_sparse(sig, rng) for _ in range(3))
        assert (u * v) * w == u * (v * w)


@pytest.mark.parametrize("sig", [Signature(2, 1), Signature(0, 3), Signature(2, 2)], ids=str)
def test_conjugations_reverse_or_keep_order(sig, rng):
    for _ in range(10):
        u = random_sparse(sig, rng, Ring.COMPLEX_RATIONAL)
        v = random_sparse(sig, rng, Ring.COMPLEX_RATIONAL)
        uv = u * v
        assert uv.grade_involution() == u.grade_involution() * v.grade_involution()
        assert uv.reversion() == v.reversion() * u.reversion()
        assert uv.pseudo_hermitian() == v.pseudo_hermitian() * u.pseudo_hermitian()
        assert uv.hermitian_conjugate() == v.hermitian_conjugate() * u.hermitian_conjugate()
        assert uv.clifford_conjugate() == v.clifford_conjugate() * u.clifford_conjugate()


def test_conjugations_are_involutions(rng):
    sig = Signature(2, 3)
    u = random_sparse(sig, rng, Ring.COMPLEX_RATIONAL)
    for op in ("grade_involution", "reversion", "pseudo_hermitian", "hermitian_conjugate"):
        assert getattr(getattr(u, op)(), op)() == u


def test_hermitian_conjugate_of_a_blade_is_its_inverse():
    sig = Signature(2, 2)
    for mask in range(sig.dimension):
        blade = Multivector.blade(sig, mask)
        assert blade * blade.hermitian_conjugate() == Multivector.scalar(sig, 1)


def test_real_pseudo_hermitian_is_reversion(rng):
    sig = Signature(1, 3)
    u = random_sparse(sig, rng)
    assert u.pseudo_hermitian() == u.reversion()


def test_complex_conjugation_flips_imaginary_unit():
    sig = Signature(1, 1)
    u = Multivector.blade(sig, blade_mask([1]), ComplexRational(2, 3))
    assert u.complex_conjugate() == Multivector.blade(sig, 1, ComplexRational(2, -3))
    assert u.pseudo_hermitian() == u.complex_conjugate()
    assert u.hermitian_conjugate() == u.complex_conjugate()


def test_projections():
    sig = Signature(3, 1)
    u = Multivector.from_terms(sig, {0: 1, 0b1: 2, 0b11: 3, 0b111: 4, 0b1111: 5})
    assert u.grade_project(2) == Multivector.blade(sig, 0b11, 3)
    assert u.even_part() + u.odd_part() == u
    assert u.quaternion_type_project(0) == Multivector.from_terms(sig, {0: 1, 0b1111: 5})
    assert u.grades() == {0, 1, 2, 3, 4}
    with pytest.raises(GradeRangeError):
        u.grade_project(5)
    with pytest.raises(GradeRangeError):
        u.quaternion_type_project(4)


def test_rings_must_match_for_products():
    sig = Signature(1, 0)
    real = Multivector.scalar(sig, 1)
    complex_ = Multivector.scalar(sig, ComplexRational(0, 1))
    with pytest.raises(RingMismatchError):
        real * complex_
    product = real.promote(Ring.COMPLEX_RATIONAL) * complex_
    assert product.ring == Ring.COMPLEX_RATIONAL


def test_signature_checks():
    with pytest.raises(SignatureError):
        Signature(-1, 2)
    with pytest.raises(SignatureError):
        Multivector.from_terms(Signature(1, 1), {4: 1})
    with pytest.raises(SignatureError):
        Multivector.scalar((1, 0), 1) + Multivector.scalar((0, 1), 1)
    with pytest.raises(SignatureError):
        Signature(6, 6).check_max(10)


def test_float_product_agrees_with_exact(rng):
    sig = Signature(2, 2)
    u, v = random_sparse(sig, rng), random_sparse(sig, rng)
    assert (u.to_float() * v.to_float()).is_close((u * v).to_float(), 1e-12)


def test_dict_form():
    sig = Signature(0, 2)
    u = Multivector.from_terms(sig, {0: Fraction(1, 2), 3: ComplexRational(0, -1)})
    assert Multivector.from_dict(u.to_dict()) == u
    assert str(Multivector.zeros(sig)) == "0"

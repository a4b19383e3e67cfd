from fractions import Fraction
from math import comb

import pytest

from src.groups import (
    ALL_GROUPS,
    GroupId,
    algebra_closure_check,
    binomial_dimension,
    bracket_closure_check,
    closed_form_dimension,
    exponential,
    is_member,
    lie_algebra_dimension,
    preserves_vectors,
    sample_exact,
    sample_exponential,
)
from src.errors import SignatureError, UnknownGroupError
from src.multivector import Multivector, Signature
from src.scalars import ComplexRational, Ring
from tests.conftest import small_signatures


def test_group_ids_parse():
    assert GroupId.parse("G2i1") == GroupId.G2I1
    assert GroupId.parse("spin+") == GroupId.SPIN_PLUS
    assert GroupId.parse("Spin") == GroupId.SPIN_PLUS
    with pytest.raises(UnknownGroupError, match="g99"):
        GroupId.parse("g99")


def test_membership_of_single_generators():
    sig = Signature(1, 0)
    e1 = Multivector.vector(sig, 1)
    assert is_member(GroupId.G23, e1)
    assert not is_member(GroupId.G12, e1)
    assert not is_member(GroupId.G2, e1)

    sig = Signature(0, 1)
    e1 = Multivector.vector(sig, 1)
    assert is_member(GroupId.G12, e1)
    assert not is_member(GroupId.G23, e1)


def test_complexified_groups_take_imaginary_vectors():
    sig = Signature(1, 0)
    ie1 = Multivector.vector(sig, 1, ComplexRational(0, 1), Ring.COMPLEX_RATIONAL)
    assert is_member(GroupId.G2I1, ie1) != is_member(GroupId.G2I3, ie1)
    # real vectors are outside both subspaces
    e1 = Multivector.vector(sig, 1, 1, Ring.COMPLEX_RATIONAL)
    assert not is_member(GroupId.G2I1, e1)
    assert not is_member(GroupId.G2I3, e1)


def test_dimension_examples():
    assert binomial_dimension(GroupId.G2, 4) == 6
    assert lie_algebra_dimension(GroupId.G2, (2, 2)) == (6, Fraction(6))
    assert binomial_dimension(GroupId.SPIN_PLUS, 6) == 15
    with pytest.raises(SignatureError):
        lie_algebra_dimension(GroupId.G2, 0)


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label)
def test_closed_forms_agree_with_binomial_sums(g):
    for n in range(1, 17):
        assert closed_form_dimension(g, n) == binomial_dimension(g, n)


def test_two_plus_three_and_two_plus_one_cover_the_nonzero_types():
    # together they miss only the grades of quaternion type 0
    for n in range(1, 10):
        type_zero = sum(comb(n, k) for k in range(0, n + 1, 4))
        assert binomial_dimension(GroupId.G23, n) + binomial_dimension(GroupId.G12, n) \
            - binomial_dimension(GroupId.G2, n) == 2 ** n - type_zero


@pytest.mark.parametrize("sig", [Signature(2, 1), Signature(1, 3), Signature(0, 4)], ids=str)
def test_bracket_relations(sig):
    for report in bracket_closure_check(sig, trials=25, seed=3):
        assert report.passed, report.details


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label)
def test_lie_algebras_close(g):
    report = algebra_closure_check(g, (2, 2), trials=20, seed=1)
    assert report.passed, report.details


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label)
@pytest.mark.parametrize("sig", small_signatures(4, n_min=1), ids=str)
def test_exact_samples_are_members(g, sig):
    samples = sample_exact(g, sig, 6, seed=7)
    assert len(samples) == 6
    for sample in samples:
        assert sample.value.ring.is_exact
        assert is_member(g, sample.value)


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label)
@pytest.mark.parametrize("sig", small_signatures(6, n_min=1), ids=str)
def test_exponential_samples_are_members(g, sig):
    samples = sample_exponential(g, sig, 20, seed=2)
    assert len(samples) == 20
    for sample in samples:
        assert not sample.value.ring.is_exact
        assert is_member(g, sample.value, 1e-9)


def test_sampling_is_seeded():
    a = sample_exact(GroupId.G23, (1, 2), 5, seed=11)
    b = sample_exact(GroupId.G23, (1, 2), 5, seed=11)
    assert [s.value for s in a] == [s.value for s in b]
    assert [s.factors for s in a] == [s.factors for s in b]


def test_exponential_of_a_bivector_is_a_rotor():
    sig = Signature(3, 0)
    x = Multivector.blade(sig, 0b11, Fraction(1, 3))
    u = exponential(x)
    assert is_member(GroupId.SPIN_PLUS, u, 1e-12)
    assert preserves_vectors(u, 1e-12)

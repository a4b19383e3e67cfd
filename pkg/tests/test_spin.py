import pytest

from src.errors import SignatureError
from src.groups import (
    FIVE_GROUPS,
    GroupId,
    is_member,
    is_unitary,
    preserves_vectors,
    sample_exact,
    spin_g2_comparison,
    spin_subgroup_report,
    spin_witness,
    vee_group,
    vee_membership,
    verify_unitary_coincidence,
)
from src.multivector import Multivector
from src.reports import Status
from tests.conftest import small_signatures


@pytest.mark.parametrize("pq", [(3, 0), (2, 2), (1, 4), (0, 5)])
def test_g2_and_spin_coincide_up_to_five_generators(pq):
    report = spin_g2_comparison(pq, samples=5, seed=0)
    assert report.passed, report.details
    assert report.details["coincide"]


@pytest.mark.parametrize("pq", [(6, 0), (3, 3), (0, 6)])
def test_six_generators_give_an_exact_witness(pq):
    report = spin_g2_comparison(pq, samples=3, seed=0)
    assert report.status == Status.WITNESS
    witness = report.details["witness"]
    assert witness["in_g2"]
    assert witness["leaks"]


def test_witness_is_in_g2_but_not_spin():
    u, triple = spin_witness((3, 3))
    assert is_member(GroupId.G2, u)
    assert not preserves_vectors(u)
    assert not is_member(GroupId.SPIN_PLUS, u)
    assert len(triple) == 3


def test_witness_needs_six_generators():
    with pytest.raises(SignatureError):
        spin_witness((2, 2))


@pytest.mark.parametrize("pq", [(0, 0), (2, 1), (1, 3)])
def test_vee_group_axioms(pq):
    report = vee_group(pq, seed=1, trials=50)
    assert report.passed, report.details
    assert report.details["order"] == 2 ** (sum(pq) + 1)


def test_vee_membership_over_one_positive_generator():
    table = vee_membership((1, 0))
    assert len(table["G23"]) == 4
    assert len(table["G12"]) == 2
    assert len(table["G2"]) == 2


@pytest.mark.parametrize("pq, group", [((3, 0), "G23"), ((0, 3), "G12"), ((2, 0), "G23")])
def test_unitary_group_matches_a_real_group(pq, group):
    report = verify_unitary_coincidence(pq, samples=5, seed=2)
    assert report.passed, report.details
    assert report.group == group


def test_unitary_coincidence_needs_a_definite_signature():
    with pytest.raises(SignatureError):
        verify_unitary_coincidence((1, 1))


def test_blades_are_unitary():
    for mask in range(8):
        assert is_unitary(Multivector.blade((1, 2), mask))


@pytest.mark.parametrize("sig", small_signatures(6, n_min=2), ids=str)
def test_spin_lies_in_each_of_the_five_groups(sig):
    report = spin_subgroup_report(sig, samples=6, seed=1)
    assert report.passed, report.details
    assert report.details["exact_samples"] == 6
    assert report.details["exponential_samples"] == 6


@pytest.mark.parametrize("pq", [(6, 0), (4, 2), (3, 3)])
def test_exact_spin_elements_at_six_generators(pq):
    for sample in sample_exact(GroupId.SPIN_PLUS, pq, 10, seed=1):
        assert preserves_vectors(sample.value)
        for g in FIVE_GROUPS:
            assert is_member(g, sample.value.promote(g.ring)), g.label

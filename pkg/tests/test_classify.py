import pytest

from src.classify import (
    ALIASES,
    G2_TABLE,
    Family,
    MatrixGroupName,
    classify,
    cross_check_tables,
    form_spec,
    signatures_up_to,
    theorem_case,
    verify_classification,
)
from src.errors import TableConsistencyError
from src.groups import ALL_GROUPS, FIVE_GROUPS, GroupId, TransportFamily, binomial_dimension
from src.matrices import Flavor
from src.multivector import Signature


def test_g2_table_entries():
    for p, row in enumerate(G2_TABLE):
        for q, text in enumerate(row):
            assert classify(GroupId.G2, (p, q)) == MatrixGroupName.parse(text), (p, q)
    assert str(classify(GroupId.G2, (4, 4))) == "²O(4,4)"
    assert str(classify("g2", (0, 3))) == "Sp(1)"


def test_spin_reads_the_g2_entry():
    name = classify(GroupId.SPIN_PLUS, (3, 0))
    assert str(name) == "Sp(1)"
    assert name.aliases == ("SU(2)",)
    assert name.relation == "isomorphic"
    assert classify(GroupId.SPIN_PLUS, (6, 0)).relation == "contains"


def test_empty_signature_is_o1():
    for g in ALL_GROUPS:
        assert classify(g, (0, 0)) == MatrixGroupName(Family.O, (1,))


@pytest.mark.parametrize("g", FIVE_GROUPS, ids=lambda g: g.label)
def test_dimensions_match_the_lie_algebras(g):
    for sig in signatures_up_to(10, 1):
        assert classify(g, sig).real_dimension() == binomial_dimension(g, sig.n), sig


def test_every_cross_check_passes():
    reports = cross_check_tables(8)
    assert [r.claim for r in reports] == [
        "g2-table",
        "spin-table",
        "theorem-cases",
        "theorem-cases",
        "transport-consistency",
        "classification-dimension",
    ]
    for report in reports:
        assert report.passed, (report.claim, report.details)


def test_name_parsing():
    assert MatrixGroupName.parse("2O(4,4)") == MatrixGroupName.parse("²O(4,4)")
    assert MatrixGroupName.parse("O(8,C)").real_dimension() == 56
    assert MatrixGroupName.parse("GL(2,H)").real_dimension() == 16
    assert MatrixGroupName.parse("Sp(1,1)").family == Family.SP_INDEF
    su2 = MatrixGroupName.parse("SU(2)")
    assert su2 == MatrixGroupName.parse(ALIASES["SU(2)"])
    assert su2.aliases == ("SU(2)",)
    assert MatrixGroupName.parse("O(3)").lie_algebra() == "so(3)"
    with pytest.raises(TableConsistencyError):
        MatrixGroupName.parse("SL(4,R)")
    with pytest.raises(TableConsistencyError):
        MatrixGroupName(Family.O_REAL_INDEF, (3,))


def test_theorem_cases_cover_their_residues():
    assert theorem_case("complex", GroupId.G23, (0, 0)) is None
    for sig in signatures_up_to(8, 1):
        case = theorem_case("complex", GroupId.G23, sig)
        if case is not None:
            assert case.entry.build(sig.n) == classify(GroupId.G23, sig)


def test_form_rules_for_g23():
    assert form_spec(GroupId.G23, (2, 0)).blade == 0
    assert form_spec(GroupId.G23, (1, 1)).blade == 0b1
    assert form_spec(GroupId.G23, (2, 2)).blade == 0b1100
    spec = form_spec(GroupId.G23, (0, 1))
    assert spec.flavor == Flavor.TRANSPOSE and not spec.twisted
    assert form_spec(GroupId.G23, (2, 1)).twisted


def test_form_rules_for_g12():
    assert form_spec(GroupId.G12, (2, 1)).blade == 0b11
    assert form_spec(GroupId.G12, (1, 1)).blade == 0b10
    assert form_spec(GroupId.G12, (1, 0)).twisted


def test_forms_of_transported_groups():
    spec = form_spec(GroupId.G2I1, (2, 1))
    assert (spec.target_group, spec.target_sig) == (GroupId.G12, Signature(1, 2))
    spec = form_spec(GroupId.G2, (2, 2))
    assert spec.transport == TransportFamily.G2_G12_DROP_LAST
    spec = form_spec(GroupId.SPIN_PLUS, (3, 0))
    assert spec.transport == TransportFamily.G2_G12_DROP_FIRST
    assert spec.target_sig == Signature(0, 2)
    assert form_spec(GroupId.G2, (0, 0)).target_group == GroupId.G23
    assert "beta(U)" in form_spec(GroupId.G23, (1, 1)).describe()


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.label)
@pytest.mark.parametrize("pq", [(2, 0), (1, 1), (0, 2), (2, 1), (3, 0), (0, 3)])
def test_classification_is_confirmed(g, pq):
    report = verify_classification(g, pq, samples=4, seed=5)
    assert report.passed, report.details
    assert report.details["flags_ok"]
    assert report.details["dimension_ok"]

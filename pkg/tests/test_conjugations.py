import pytest

from src.multivector import Signature, dagger_identity_report, verify_dagger_identities
from src.reports import Status
from src.representation import get_representation
from src.representation.verify import verify_additional_signature_table, verify_conjugation_identities
from tests.conftest import small_signatures


@pytest.mark.parametrize("sig", small_signatures(5, n_min=1), ids=str)
def test_dagger_as_conjugated_pseudo_hermitian(sig):
    report = dagger_identity_report(sig)
    assert report.passed, report.details


@pytest.mark.parametrize("sig", small_signatures(5, n_min=1), ids=str)
def test_class_adjoint_identities(sig):
    reports = verify_conjugation_identities(get_representation(sig))
    assert reports
    for report in reports:
        assert report.passed, (report.claim, report.details)


def test_transpose_identity_holds_outside_the_quaternionic_classes():
    for sig in (Signature(2, 0), Signature(1, 2), Signature(3, 0), Signature(2, 2)):
        report = verify_conjugation_identities(get_representation(sig))[-1]
        assert report.claim == "transpose-additional-signature"
        assert report.status == Status.PASS
        assert report.details["expected_to_hold"]


def test_every_case_is_reported():
    sig = Signature(2, 3)
    assert len(verify_dagger_identities(sig)) == 2
    claims = [r.claim for r in verify_conjugation_identities(get_representation(sig))]
    assert claims.count("reversion-conjugation") == 2


def test_additional_signature_table():
    reports = verify_additional_signature_table(8)
    assert reports
    assert all(r.passed for r in reports)
    assert {tuple(r.signature) for r in reports} >= {(1, 2), (3, 0), (2, 3)}


def test_dagger_check_covers_every_blade_and_both_units():
    for report in verify_dagger_identities(Signature(3, 5)):
        assert report.passed, report.details
        assert report.details["checked"] == 2 * 2 ** 8


def test_dagger_check_reports_the_failing_blades(monkeypatch):
    from src.multivector import identities

    monkeypatch.setattr(identities, "conjugate_by_blade", lambda x, mask: x)
    reports = verify_dagger_identities(Signature(1, 1))
    assert not all(r.passed for r in reports)
    failing = [f["blade"] for r in reports for f in r.details["failures"]]
    assert failing

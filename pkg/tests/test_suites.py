import pytest

from src.reports import Status
from src.suites import DEFAULT_N_MAX, SCOPES, dimension_reports, run_signature, run_suite


def test_scopes():
    assert "all" in SCOPES
    assert set(SCOPES) - {"all"} == set(DEFAULT_N_MAX)


def test_dimension_closed_forms_up_to_sixteen():
    reports = dimension_reports(16)
    assert len(reports) == 16
    assert all(r.passed for r in reports)
    assert reports[3].details["dimensions"]["G2"] == 6


@pytest.mark.parametrize("scope", ["relat", "addsig", "vee", "brackets", "transport"])
def test_small_scopes_pass(scope):
    reports = run_suite(scope, n_max=3, seed=0, samples=3, jobs=1)
    assert reports
    for report in reports:
        assert report.passed, (report.label, report.details)


def test_conjugation_scope_finds_a_quaternionic_counterexample():
    reports = run_suite("conjugation", n_max=3, seed=0, samples=3, jobs=1)
    assert all(r.passed for r in reports)
    last = reports[-1]
    assert last.claim == "transpose-counterexample"
    assert not last.details["vacuous"]
    assert any(r.status == Status.WITNESS for r in reports)


def test_spin_witness_is_vacuous_below_six():
    reports = run_suite("spin", n_max=3, seed=0, samples=2, jobs=1)
    last = reports[-1]
    assert last.claim == "spin-divergence-witness"
    assert last.passed and last.details["vacuous"]


def test_tables_scope():
    reports = run_suite("tables", n_max=6, jobs=1)
    assert all(r.passed for r in reports)


def test_work_items_are_independent_of_order():
    first = run_signature("vee", 1, 2, 0, 3)
    again = run_signature("vee", 1, 2, 0, 3)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in again]


def test_process_pool_matches_inline():
    inline = run_suite("relat", n_max=2, seed=0, jobs=1)
    pooled = run_suite("relat", n_max=2, seed=0, jobs=2)
    assert [r.to_dict() for r in inline] == [r.to_dict() for r in pooled]


def test_progress_callback():
    seen = []
    run_suite("relat", n_max=1, jobs=1, progress=lambda i, total, scope, sig: seen.append((i, total)))
    assert seen == [(1, 3), (2, 3), (3, 3)]


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_suite("nope")

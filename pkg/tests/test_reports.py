import json

from src.reports import Report, Status, check, summarize
from src.suites import run_suite


def _round_trip(report: Report) -> Report:
    return Report.from_dict(json.loads(json.dumps(report.to_dict(), default=str)))


def test_json_round_trip():
    reports = [
        check("relat", True, signature=(2, 1), seed=4, checked=8),
        check("dims", False, group="G23", failures=[3, 5], expected="15"),
        Report("spin-g2-comparison", Status.WITNESS, (6, 0), "G2", {"coincide": False}, 0),
        Report("tables", Status.PASS),
    ]
    for report in reports:
        assert _round_trip(report) == report


def test_suite_reports_survive_json():
    reports = run_suite("vee", 2, 0, None, 1)
    assert reports
    assert [_round_trip(r) for r in reports] == reports


def test_summary_counts_witnesses_as_passing():
    reports = [check("a", True), Report("b", Status.WITNESS)]
    assert summarize(reports) == {"total": 2, "counts": {"pass": 1, "fail": 0, "witness": 1}, "overall": "pass"}
    reports.append(check("c", False))
    assert summarize(reports)["overall"] == "fail"

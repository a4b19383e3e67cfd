import json

from src.database import ReportStore
from src.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def _json_lines(text: str) -> list:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_repr_json(capsys):
    assert main(["repr", "--p", "1", "--q", "2", "--format", "json"]) == EXIT_OK
    [obj] = _json_lines(capsys.readouterr().out)
    assert obj["additional_signature"]["k"] == 2
    assert obj["additional_signature"]["l"] == 1


def test_repr_text(capsys):
    assert main(["repr", "--p", "0", "--q", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Cl(0,2)" in out
    assert "beta(e2) =" in out


def test_classify(capsys):
    assert main(["classify", "--group", "g2", "--p", "4", "--q", "4"]) == EXIT_OK
    assert "²O(4,4)" in capsys.readouterr().out

    assert main(["classify", "--group", "spin", "--p", "3", "--q", "0"]) == EXIT_OK
    assert "also SU(2)" in capsys.readouterr().out


def test_classify_with_verification(capsys):
    code = main(["classify", "--group", "g23", "--p", "2", "--q", "0", "--verify",
                 "--samples", "3", "--format", "json"])
    assert code == EXIT_OK
    [obj] = _json_lines(capsys.readouterr().out)
    assert obj["verification"]["status"] == "pass"
    assert obj["form"]["blade"] == "e"


def test_verify_without_store(capsys):
    code = main(["verify", "relat", "--n-max", "2", "--jobs", "1", "--no-store", "--format", "json"])
    assert code == EXIT_OK
    lines = _json_lines(capsys.readouterr().out)
    assert lines[-1]["summary"]["overall"] == "pass"
    assert lines[-1]["summary"]["total"] == len(lines) - 1


def test_verify_records_into_the_store(tmp_path, capsys):
    db = str(tmp_path / "runs.db")
    assert main(["verify", "dims", "--n-max", "5", "--db", db]) == EXIT_OK
    assert "overall pass" in capsys.readouterr().out

    store = ReportStore(db)
    try:
        stats = store.get_stats()
        assert stats["total_runs"] == 1
        assert stats["total_reports"] == 5
    finally:
        store.close()


def test_verify_drops_expired_runs_and_reports_stats(tmp_path, capsys):
    db = str(tmp_path / "runs.db")
    store = ReportStore(db)
    old = store.start_run("dims", n_max=2, seed=0)
    store.connection.execute("UPDATE runs SET started_at = ? WHERE id = ?", ("2000-01-01T00:00:00", old))
    store.connection.commit()
    store.close()

    assert main(["verify", "dims", "--n-max", "3", "--db", db, "--format", "json"]) == EXIT_OK
    summary = _json_lines(capsys.readouterr().out)[-1]["summary"]
    assert summary["store"]["total_runs"] == 1
    assert summary["store"]["total_reports"] == 3


def test_vee_and_sample(capsys):
    assert main(["vee", "--p", "2", "--q", "1"]) == EXIT_OK
    assert "order 16" in capsys.readouterr().out

    assert main(["sample", "--group", "g23", "--p", "1", "--q", "1", "--samples", "2",
                 "--format", "json"]) == EXIT_OK
    lines = _json_lines(capsys.readouterr().out)
    assert len(lines) == 4
    assert {line["provenance"] for line in lines} == {"exact_vector_product", "lie_exponential"}


def test_output_file(tmp_path):
    path = tmp_path / "out.jsonl"
    assert main(["vee", "--p", "1", "--q", "0", "--format", "json", "--output", str(path)]) == EXIT_OK
    [obj] = _json_lines(path.read_text())
    assert obj["report"]["details"]["order"] == 4


def test_bad_input():
    assert main(["repr", "--p", "-1", "--q", "0"]) == EXIT_USAGE
    assert main(["repr", "--p", "1"]) == EXIT_USAGE
    assert main(["classify", "--group", "g7", "--p", "1", "--q", "0"]) == EXIT_USAGE
    assert main(["sample", "--p", "1", "--q", "0", "--tol", "0"]) == EXIT_USAGE
    assert main(["verify", "nothing"]) == EXIT_USAGE


def test_failing_claims_exit_one(monkeypatch):
    from src import main as cli
    from src.reports import check

    monkeypatch.setattr(cli, "run_suite", lambda *args: [check("relat", False, signature=(0, 1))])
    assert main(["verify", "relat", "--no-store"]) == EXIT_FAILED

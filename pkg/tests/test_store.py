from src.reports import Report, Status, check


def _witness(seed=0, **details):
    return Report("spin-g2-comparison", Status.WITNESS, (3, 3), "G2", details or {"coincide": False}, seed)


def test_runs_and_reports(store):
    run_id = store.start_run("relat", n_max=4, seed=0)
    reports = [
        check("relat", True, signature=(1, 0), seed=0),
        check("relat", False, signature=(0, 1), seed=0, failures=[1]),
    ]
    for report in reports:
        store.record(report, run_id)
    store.finish_run(run_id, reports)

    stats = store.get_stats()
    assert stats["total_runs"] == 1
    assert stats["total_reports"] == 2
    assert stats["failed_reports"] == 1
    assert stats["total_witnesses"] == 0


def test_witnesses_are_kept_once(store):
    store.record(_witness(coincide=False, note="first"))
    store.record(_witness(coincide=False, note="second"))
    store.record(_witness(seed=1))

    witnesses = store.get_witnesses("spin-g2-comparison")
    assert len(witnesses) == 2
    assert witnesses[0].details["note"] == "second"
    assert witnesses[0].signature == (3, 3)
    assert store.get_stats()["total_reports"] == 3


def test_witnesses_without_signature_are_kept_once(store):
    aggregate = Report("transpose-counterexample", Status.WITNESS, details={"signature": [0, 4]})
    store.record(aggregate)
    store.record(aggregate)
    assert len(store.get_witnesses()) == 1


def test_cleanup_removes_old_runs(store):
    old = store.start_run("dims")
    store.record(check("dimension-closed-form", True), old)
    recent = store.start_run("dims")
    store.connection.execute("UPDATE runs SET started_at = ? WHERE id = ?", ("2000-01-01T00:00:00", old))
    store.connection.commit()

    assert store.cleanup_old_runs(days=30) == 1
    stats = store.get_stats()
    assert stats["total_runs"] == 1
    assert stats["total_reports"] == 0
    assert recent != old

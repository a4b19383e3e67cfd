"""
Report Store Module

Uses Turso (libsql) to keep verification runs, reports and Spin+ witnesses.
Falls back to local SQLite if Turso is not configured.
"""

import json
import logging
import os
import sqlite3
import sys
from datetime import datetime, timedelta
from typing import Optional

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..reports import Report, Status

logger = logging.getLogger(__name__)

# Try to import libsql, fall back to sqlite3
try:
    import libsql_experimental as libsql
    HAS_LIBSQL = True
except ImportError:
    HAS_LIBSQL = False
    logger.debug("libsql not available, using local SQLite")


def _sig_columns(report: Report) -> tuple:
    if report.signature is None:
        return None, None
    return report.signature[0], report.signature[1]


class ReportStore:
    def __init__(self, db_path: Optional[str] = None):
        self.connection = None
        self.use_turso = False

        if db_path is None and config.TURSO_DATABASE_URL and config.TURSO_AUTH_TOKEN and HAS_LIBSQL:
            try:
                self.connection = libsql.connect(
                    config.TURSO_DATABASE_URL,
                    auth_token=config.TURSO_AUTH_TOKEN
                )
                self.use_turso = True
                logger.info("Connected to Turso database")
            except Exception as e:
                logger.warning(f"Failed to connect to Turso: {e}")
                self._use_local_sqlite(db_path)
        else:
            self._use_local_sqlite(db_path)

        self._create_tables()

    def _use_local_sqlite(self, db_path: Optional[str]):
        """Fall back to local SQLite database."""
        db_path = db_path or config.REPORTS_DB_PATH
        directory = os.path.dirname(db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.connection = sqlite3.connect(db_path)
        self.use_turso = False
        logger.debug(f"Using local SQLite database: {db_path}")

    def _create_tables(self):
        cursor = self.connection.cursor()

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                scope TEXT NOT NULL,
                n_max INTEGER,
                seed INTEGER,
                started_at TEXT NOT NULL,
                finished_at TEXT,
                passed INTEGER DEFAULT 0,
                failed INTEGER DEFAULT 0
            )
        """)

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                run_id INTEGER,
                claim TEXT NOT NULL,
                p INTEGER,
                q INTEGER,
                grp TEXT,
                status TEXT NOT NULL,
                details TEXT,
                seed INTEGER,
                recorded_at TEXT NOT NULL
            )
        """)

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS witnesses (
                witness_key TEXT PRIMARY KEY,
                claim TEXT NOT NULL,
                p INTEGER,
                q INTEGER,
                grp TEXT,
                seed INTEGER,
                payload TEXT NOT NULL,
                recorded_at TEXT NOT NULL
            )
        """)

        cursor.execute("""
            CREATE INDEX IF NOT EXISTS idx_reports_run
            ON reports(run_id)
        """)

        self.connection.commit()

    def start_run(self, scope: str, n_max: Optional[int] = None, seed: Optional[int] = None) -> int:
        """Open a run and return its id."""
        cursor = self.connection.cursor()
        now = datetime.now().isoformat()
        cursor.execute(
            "INSERT INTO runs (scope, n_max, seed, started_at) VALUES (?, ?, ?, ?)",
            (scope, n_max, seed, now)
        )
        self.connection.commit()
        return cursor.lastrowid

    def record(self, report: Report, run_id: Optional[int] = None) -> None:
        """Store one report; witnesses also go to the witnesses table."""
        cursor = self.connection.cursor()
        now = datetime.now().isoformat()
        p, q = _sig_columns(report)

        cursor.execute("""
            INSERT INTO reports (run_id, claim, p, q, grp, status, details, seed, recorded_at)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
        """, (run_id, report.claim, p, q, report.group, report.status.value,
              json.dumps(report.details, default=str), report.seed, now))

        self.connection.commit()

        if report.status == Status.WITNESS:
            self.record_witness(report)

    def record_witness(self, report: Report) -> None:
        """Keep a witness; the same claim, signature, group and seed is stored once."""
        cursor = self.connection.cursor()
        now = datetime.now().isoformat()
        p, q = _sig_columns(report)
        # NULLs never collide in a UNIQUE constraint, so the key spells them out
        key = f"{report.claim}|{p}|{q}|{report.group}|{report.seed}"
        payload = json.dumps(report.to_dict(), default=str)

        cursor.execute("""
            INSERT INTO witnesses (witness_key, claim, p, q, grp, seed, payload, recorded_at)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            ON CONFLICT(witness_key) DO UPDATE SET payload = ?, recorded_at = ?
        """, (key, report.claim, p, q, report.group, report.seed, payload, now, payload, now))

        self.connection.commit()

    def finish_run(self, run_id: int, reports: list) -> None:
        """Close a run with its pass/fail counts."""
        cursor = self.connection.cursor()
        now = datetime.now().isoformat()
        passed = sum(1 for r in reports if r.passed)
        failed = len(reports) - passed

        cursor.execute(
            "UPDATE runs SET finished_at = ?, passed = ?, failed = ? WHERE id = ?",
            (now, passed, failed, run_id)
        )

        self.connection.commit()

    def get_witnesses(self, claim: Optional[str] = None) -> list[Report]:
        cursor = self.connection.cursor()
        if claim is None:
            cursor.execute("SELECT payload FROM witnesses ORDER BY p, q, seed")
        else:
            cursor.execute("SELECT payload FROM witnesses WHERE claim = ? ORDER BY p, q, seed", (claim,))
        return [Report.from_dict(json.loads(row[0])) for row in cursor.fetchall()]

    def cleanup_old_runs(self, days: int = 90) -> int:
        """Remove runs (and their reports) older than specified days."""
        cursor = self.connection.cursor()
        cutoff = (datetime.now() - timedelta(days=days)).isoformat()

        cursor.execute(
            "DELETE FROM reports WHERE run_id IN (SELECT id FROM runs WHERE started_at < ?)",
            (cutoff,)
        )
        cursor.execute("DELETE FROM runs WHERE started_at < ?", (cutoff,))

        deleted = cursor.rowcount
        self.connection.commit()

        if deleted > 0:
            logger.info(f"Cleaned up {deleted} old runs")

        return deleted

    def get_stats(self) -> dict:
        cursor = self.connection.cursor()

        cursor.execute("SELECT COUNT(*) FROM runs")
        total_runs = cursor.fetchone()[0]

        cursor.execute("SELECT COUNT(*) FROM reports")
        total_reports = cursor.fetchone()[0]

        cursor.execute("SELECT COUNT(*) FROM reports WHERE status = ?", (Status.FAIL.value,))
        failed_reports = cursor.fetchone()[0]

        cursor.execute("SELECT COUNT(*) FROM witnesses")
        total_witnesses = cursor.fetchone()[0]

        return {
            "total_runs": total_runs,
            "total_reports": total_reports,
            "failed_reports": failed_reports,
            "total_witnesses": total_witnesses,
        }

    def close(self):
        """Close the database connection."""
        if self.connection:
            try:
                self.connection.close()
            except AttributeError:
                pass  # libsql connections don't have close()

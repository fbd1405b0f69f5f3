# -*- coding: utf-8 -*-
"""
Report archive.
Stores computed reports keyed by an instance fingerprint, plus a run log.
"""

import hashlib
import json
import os
import sqlite3
from typing import Any, Dict, List, Optional

from config import DB_PATH


def _resolve(db_path: Optional[str]) -> str:
    path = db_path or DB_PATH
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    return path


def get_conn(db_path: Optional[str] = None) -> sqlite3.Connection:
    conn = sqlite3.connect(_resolve(db_path), check_same_thread=False)
    conn.row_factory = sqlite3.Row
    return conn


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def fingerprint(doc: Any) -> str:
    return hashlib.sha256(canonical_json(doc).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------
# INTERNAL HELPERS
# ---------------------------------------------------------------------
def _table_exists(conn: sqlite3.Connection, name: str) -> bool:
    cur = conn.cursor()
    cur.execute("SELECT name FROM sqlite_master WHERE type='table' AND name=?;", (name,))
    return cur.fetchone() is not None


def _column_exists(conn: sqlite3.Connection, table: str, column: str) -> bool:
    cur = conn.cursor()
    cur.execute(f"PRAGMA table_info({table});")
    cols = [r[1] for r in cur.fetchall()]
    return column in cols


# ---------------------------------------------------------------------
# INITIALIZATION / MIGRATIONS
# ---------------------------------------------------------------------
def init_db(db_path: Optional[str] = None) -> None:
    """Create tables if missing; add newer columns to older archives."""
    conn = get_conn(db_path)
    cur = conn.cursor()

    if not _table_exists(conn, "reports"):
        cur.execute(
            """
            CREATE TABLE reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                command TEXT,
                fingerprint TEXT,
                instance_json TEXT,
                report_json TEXT,
                created_at TEXT DEFAULT (datetime('now'))
            );
            """
        )

    if not _table_exists(conn, "run_log"):
        cur.execute(
            """
            CREATE TABLE run_log (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                action TEXT,
                report_id INTEGER,
                details TEXT,
                timestamp TEXT DEFAULT (datetime('now')),
                FOREIGN KEY(report_id) REFERENCES reports(id)
            );
            """
        )

    # Safe column upgrades (idempotent)
    def _addcol(table: str, column: str, decl: str):
        if not _column_exists(conn, table, column):
            cur.execute(f"ALTER TABLE {table} ADD COLUMN {column} {decl};")

    _addcol("reports", "lct", "TEXT")
    _addcol("reports", "case_tag", "TEXT")
    _addcol("reports", "status", "INTEGER DEFAULT 0")

    conn.commit()
    conn.close()


# ---------------------------------------------------------------------
# REPORTS
# ---------------------------------------------------------------------
def archive_report(
    command: str,
    instance_doc: Optional[Dict[str, Any]],
    report_doc: Dict[str, Any],
    status: int = 0,
    db_path: Optional[str] = None,
) -> int:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute(
        """
        INSERT INTO reports (command, fingerprint, instance_json, report_json, lct, case_tag, status)
        VALUES (?, ?, ?, ?, ?, ?, ?);
        """,
        (
            command,
            fingerprint(instance_doc) if instance_doc is not None else None,
            canonical_json(instance_doc) if instance_doc is not None else None,
            canonical_json(report_doc),
            report_doc.get("lct"),
            report_doc.get("case_tag"),
            status,
        ),
    )
    conn.commit()
    report_id = cur.lastrowid
    conn.close()
    return report_id


def _row_to_dict(row: sqlite3.Row) -> Dict[str, Any]:
    out = dict(row)
    out["instance"] = json.loads(out.pop("instance_json")) if out.get("instance_json") else None
    out["report"] = json.loads(out.pop("report_json")) if out.get("report_json") else None
    return out


def get_report(report_id: int, db_path: Optional[str] = None) -> Optional[Dict[str, Any]]:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute("SELECT * FROM reports WHERE id=?;", (report_id,))
    row = cur.fetchone()
    conn.close()
    return _row_to_dict(row) if row else None


def find_reports(instance_doc: Dict[str, Any], db_path: Optional[str] = None) -> List[Dict[str, Any]]:
    """All archived reports for the same instance document."""
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute("SELECT * FROM reports WHERE fingerprint=? ORDER BY id;", (fingerprint(instance_doc),))
    rows = [_row_to_dict(r) for r in cur.fetchall()]
    conn.close()
    return rows


def list_reports(command_filter: str = "All", db_path: Optional[str] = None) -> List[Dict[str, Any]]:
    conn = get_conn(db_path)
    cur = conn.cursor()
    q = "SELECT * FROM reports"
    params: List[Any] = []
    if command_filter and command_filter != "All":
        q += " WHERE command=?"
        params.append(command_filter)
    q += " ORDER BY id DESC;"
    cur.execute(q, params)
    rows = [_row_to_dict(r) for r in cur.fetchall()]
    conn.close()
    return rows


def count_reports(db_path: Optional[str] = None) -> int:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute("SELECT COUNT(*) FROM reports;")
    count = cur.fetchone()[0]
    conn.close()
    return count


def delete_report(report_id: int, db_path: Optional[str] = None) -> bool:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute("DELETE FROM reports WHERE id=?;", (report_id,))
    conn.commit()
    ok = cur.rowcount > 0
    conn.close()
    return ok


# ---------------------------------------------------------------------
# RUN LOG
# ---------------------------------------------------------------------
def log_run(action: str, report_id: Optional[int] = None, details: Optional[str] = None,
            db_path: Optional[str] = None) -> None:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute(
        "INSERT INTO run_log (action, report_id, details) VALUES (?, ?, ?);",
        (action, report_id, details),
    )
    conn.commit()
    conn.close()


def get_recent_runs(limit: int = 20, db_path: Optional[str] = None) -> List[Dict[str, Any]]:
    conn = get_conn(db_path)
    cur = conn.cursor()
    cur.execute("SELECT * FROM run_log ORDER BY id DESC LIMIT ?;", (limit,))
    rows = [dict(r) for r in cur.fetchall()]
    conn.close()
    return rows

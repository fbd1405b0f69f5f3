import ast
import io
import json
import os
import zipfile

import pytest

import db
from errors import IOFailure
from storage import build_archive_zip, read_input, write_output

INSTANCE = {"d": 1, "exponents": [["3/2"]]}


@pytest.fixture
def archive(tmp_path):
    path = str(tmp_path / "nested" / "qolct.db")
    db.init_db(path)
    return path


def test_init_db_is_idempotent(archive):
    db.init_db(archive)
    assert db.count_reports(archive) == 0


def test_fingerprint_ignores_key_order():
    assert db.fingerprint({"d": 1, "exponents": []}) == db.fingerprint({"exponents": [], "d": 1})


def test_archive_and_fetch(archive):
    report = {"lct": "5/6", "case_tag": "Case1"}
    report_id = db.archive_report("lct", INSTANCE, report, db_path=archive)
    row = db.get_report(report_id, db_path=archive)
    assert row["instance"] == INSTANCE
    assert row["report"] == report
    assert row["lct"] == "5/6"
    assert row["status"] == 0
    assert db.get_report(report_id + 1, db_path=archive) is None


def test_list_and_filter(archive):
    db.archive_report("lct", INSTANCE, {"lct": "5/6"}, db_path=archive)
    db.archive_report("poles", INSTANCE, {"pole_candidates": []}, db_path=archive)
    db.archive_report("verify", None, {"summary": {}}, status=1, db_path=archive)
    assert db.count_reports(archive) == 3
    assert [r["command"] for r in db.list_reports(db_path=archive)] == ["verify", "poles", "lct"]
    assert [r["command"] for r in db.list_reports("poles", db_path=archive)] == ["poles"]
    assert len(db.find_reports(INSTANCE, db_path=archive)) == 2


def test_delete(archive):
    report_id = db.archive_report("lct", INSTANCE, {}, db_path=archive)
    assert db.delete_report(report_id, db_path=archive)
    assert not db.delete_report(report_id, db_path=archive)


def test_run_log(archive):
    db.log_run("lct", report_id=1, details="exit 0", db_path=archive)
    db.log_run("export_zip", db_path=archive)
    runs = db.get_recent_runs(limit=5, db_path=archive)
    assert [r["action"] for r in runs] == ["export_zip", "lct"]


def test_build_archive_zip(archive):
    report_id = db.archive_report("lct", INSTANCE, {"lct": "5/6"}, db_path=archive)
    blob = build_archive_zip(db.list_reports(db_path=archive))
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        name = f"report_{report_id:06d}_lct.json"
        assert zf.namelist() == [name]
        body = json.loads(zf.read(name))
    assert body["instance"] == INSTANCE
    assert body["report"] == {"lct": "5/6"}


def test_write_output_uses_lf(tmp_path):
    target = tmp_path / "r.json"
    write_output("{}\n", str(target))
    assert target.read_bytes() == b"{}\n"


def test_read_input_missing_file(tmp_path):
    missing = str(tmp_path / "nope.json")
    with pytest.raises(IOFailure) as info:
        read_input(missing)
    assert info.value.locus == missing
    assert info.value.exit_status == 2


def test_write_output_under_a_file(tmp_path):
    (tmp_path / "blocker").write_bytes(b"")
    target = str(tmp_path / "blocker" / "r.json")
    with pytest.raises(IOFailure) as info:
        write_output("{}\n", target)
    assert info.value.locus == target


@pytest.mark.parametrize("page", ["1_Verification.py", "2_Archive.py"])
def test_pages_create_the_schema_first(page):
    path = os.path.join(os.path.dirname(__file__), "..", "pages", page)
    with open(path, encoding="utf-8") as f:
        tree = ast.parse(f.read())
    main = next(node for node in tree.body if isinstance(node, ast.FunctionDef) and node.name == "main")
    first = main.body[0]
    assert isinstance(first, ast.Expr) and isinstance(first.value, ast.Call)
    assert first.value.func.id == "init_db"

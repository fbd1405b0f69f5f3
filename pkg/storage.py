import io
import json
import sys
import zipfile
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from errors import IOFailure


def read_input(path: Optional[str] = None) -> bytes:
    """Raw bytes of the instance document; stdin when ``path`` is None or "-"."""
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise IOFailure(f"cannot read input: {e.strerror or e}", locus=path)


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write a report to ``path`` (UTF-8, LF newlines) or to stdout."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise IOFailure(f"cannot write output: {e.strerror or e}", locus=path)


def build_archive_zip(rows: Iterable[Dict[str, Any]]) -> bytes:
    """
    Build an in-memory .zip with one JSON file per archived report.

    Nothing is written to disk; the caller offers the bytes for download
    or saves them itself.
    """
    mem_zip = io.BytesIO()
    with zipfile.ZipFile(mem_zip, "w", zipfile.ZIP_DEFLATED) as zf:
        for row in rows:
            name = f"report_{row['id']:06d}_{row.get('command') or 'unknown'}.json"
            body = {
                "command": row.get("command"),
                "created_at": row.get("created_at"),
                "instance": row.get("instance"),
                "report": row.get("report"),
            }
            zf.writestr(name, json.dumps(body, sort_keys=True, indent=2) + "\n")
    mem_zip.seek(0)
    return mem_zip.getvalue()

# pages/2_Archive.py
import sys, os

CURRENT_DIR = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.abspath(os.path.join(CURRENT_DIR, ".."))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

import pandas as pd
import streamlit as st

from cli import COMMANDS
from db import count_reports, delete_report, init_db, list_reports, log_run
from storage import build_archive_zip


# ------------------------- Report list ------------------------
def section_reports(rows):
    frame = pd.DataFrame([
        {
            "id": r["id"],
            "command": r["command"],
            "lct": r.get("lct") or "—",
            "case": r.get("case_tag") or "—",
            "status": r.get("status"),
            "created": r.get("created_at"),
            "input": (r.get("instance") or {}).get("exponents", "—"),
        }
        for r in rows
    ])
    st.dataframe(frame, use_container_width=True, hide_index=True)

    for r in rows[:50]:
        with st.expander(f"#{r['id']} • {r['command']} • {r.get('created_at')}"):
            st.json(r.get("report") or {})
            if st.button("Delete", key=f"del_{r['id']}"):
                if delete_report(r["id"]):
                    log_run("delete", report_id=r["id"])
                    st.success("Deleted.")
                    st.rerun()
                else:
                    st.error("Could not delete (already gone?).")


# ------------------------- Export ------------------------
def section_export(rows, label: str):
    st.subheader("Export")
    st.write("Download the listed reports as a .zip with one JSON file per report.")
    if st.button("Generate & Download ZIP"):
        try:
            zip_bytes = build_archive_zip(rows)
            st.download_button(
                "Download reports (.zip)",
                data=zip_bytes,
                file_name=f"qolct_reports_{label.lower()}.zip",
                mime="application/zip"
            )
            log_run("export_zip", details=f"{len(rows)} report(s), filter {label}")
        except Exception as e:
            st.error(f"Could not build ZIP: {e}")


def main():
    init_db()
    st.title("Report archive")
    st.caption(f"{count_reports()} archived report(s).")

    label = st.selectbox("Command", ["All", *COMMANDS])
    rows = list_reports(label)
    if not rows:
        st.caption("No reports yet.")
        return

    section_reports(rows)
    st.divider()
    section_export(rows, label)

if __name__ == '__main__':
    main()

# app.py
import json
import logging

import pandas as pd
import streamlit as st

# ──────────────────────────────────────────────────────────────────────────────
# Page config — must be the first Streamlit call
# ──────────────────────────────────────────────────────────────────────────────
st.set_page_config(
    page_title="Quasi-ordinary lct explorer",
    page_icon="∑",
    layout="wide",
    initial_sidebar_state="expanded"
)

from cli import cmd_lct, parse_instance
from config import DB_PATH, LOG_LEVEL
from db import archive_report, get_recent_runs, init_db, log_run
from errors import QoLctError

EXAMPLE = '{"d": 2, "exponents": [["1/3", "1/3"], ["7/6", "2/3"]]}'

# ──────────────────────────────────────────────────────────────────────────────
# Init DB + logging once
# ──────────────────────────────────────────────────────────────────────────────
@st.cache_resource(show_spinner=False)
def _boot():
    logging.basicConfig(level=LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")
    init_db()
    return True

_boot()

# ──────────────────────────────────────────────────────────────────────────────
# Tables
# ──────────────────────────────────────────────────────────────────────────────
def invariants_frame(report: dict) -> pd.DataFrame:
    inv = report["invariants"]
    g = len(inv["n"])
    return pd.DataFrame({
        "j": list(range(0, g + 1)),
        "n_j": [None] + inv["n"],
        "e_j": inv["e"],
        "l_j": inv["ell"],
    }).set_index("j")


def table_frame(report: dict) -> pd.DataFrame:
    """One row per level j, one column per coordinate i, cells 'b/B (p, q)'."""
    rows = []
    for j, (pairs, alphas) in enumerate(zip(report["bB"], report["alpha"]), start=1):
        row = {"j": j}
        for i, (bB, pq) in enumerate(zip(pairs, alphas), start=1):
            row[f"i={i}"] = f"{bB['b']}/{bB['B']}  (p={pq['p']}, q={pq['q']})"
        rows.append(row)
    return pd.DataFrame(rows).set_index("j") if rows else pd.DataFrame()

# ──────────────────────────────────────────────────────────────────────────────
# UI
# ──────────────────────────────────────────────────────────────────────────────
def show_report(report: dict):
    c1, c2, c3 = st.columns(3)
    c1.metric("lct", report["lct"])
    c2.metric("Case", report["case_tag"])
    c3.metric("Log canonical", "yes" if report["log_canonical"] else "no")

    for w in report["warnings"]:
        st.warning(w)
    if report["permutation"] != sorted(report["permutation"]):
        st.info(f"Variables permuted by {report['permutation']}: {report['normalized_input']['exponents']}")

    st.subheader("Invariants")
    st.dataframe(invariants_frame(report), use_container_width=True)

    st.subheader("(b, B) table")
    st.dataframe(table_frame(report), use_container_width=True)

    st.subheader("A-values")
    st.table(pd.DataFrame([report["A"]]))

    st.subheader("Candidate poles")
    st.write(", ".join(report["pole_candidates"]) or "none")
    st.caption("Only the largest candidate, -lct, is guaranteed to be a pole.")

    with st.expander("Raw report"):
        st.json(report)


def show_landing():
    st.title("Log canonical thresholds of quasi-ordinary singularities")
    st.caption("Paste characteristic exponents; every coordinate is an exact rational string.")

    with st.form("instance_form", clear_on_submit=False):
        text = st.text_area("Instance document", value=EXAMPLE, height=140)
        archive = st.checkbox("Archive this report", value=True)
        submitted = st.form_submit_button("Compute")

    if submitted:
        try:
            doc = parse_instance(text)
            report, status = cmd_lct(doc, None)
        except QoLctError as e:
            st.error(f"{e.code}: {e.message}" + (f" (at {e.locus})" if e.locus else ""))
            return
        if archive:
            report_id = archive_report("lct", doc.to_dict(), report, status=status)
            log_run("lct", report_id=report_id, details="explorer")
            st.success(f"Archived as report #{report_id}")
        show_report(report)

    st.write("---")
    runs = get_recent_runs(limit=10)
    if runs:
        st.caption("Recent runs")
        st.dataframe(pd.DataFrame(runs), use_container_width=True)
    st.caption(f"Archive: {DB_PATH}")

# ──────────────────────────────────────────────────────────────────────────────
# Run
# ──────────────────────────────────────────────────────────────────────────────
if __name__ == "__main__":
    show_landing()

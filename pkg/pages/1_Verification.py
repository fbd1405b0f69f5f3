# pages/1_Verification.py
import sys, os
CURRENT_DIR = os.path.dirname(os.path.abspath(__file__))
PROJECT_ROOT = os.path.abspath(os.path.join(CURRENT_DIR, ".."))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

import json

import pandas as pd
import streamlit as st

from config import MAX_REDRAWS
from db import archive_report, init_db, log_run
from errors import QoLctError
from verify import CorpusConfig, run_corpus


def main():
    init_db()
    st.title("Property verification")
    st.caption("Seeded random corpora checked against the unrolled table, the closed form and the inequalities behind it.")

    with st.form("corpus_form"):
        c1, c2, c3 = st.columns(3)
        count = c1.number_input("Instances", min_value=1, max_value=5000, value=200)
        seed = c2.number_input("Seed", min_value=0, value=0)
        forced = c3.slider("Share with lambda_1 = (1/k, 0, ..., 0)", 0.0, 1.0, 0.2)
        c4, c5, c6 = st.columns(3)
        d = c4.selectbox("d", ["random", 1, 2, 3, 4])
        g = c5.selectbox("g", ["random", 1, 2, 3, 4])
        max_den = c6.number_input("Largest denominator", min_value=1, max_value=60, value=12)
        submitted = st.form_submit_button("Run")

    if not submitted:
        return

    cfg = CorpusConfig(
        count=int(count),
        seed=int(seed),
        d=None if d == "random" else int(d),
        g=None if g == "random" else int(g),
        max_denominator=int(max_den),
        forced_fraction=float(forced),
        max_redraws=MAX_REDRAWS,
    )
    try:
        with st.spinner("Verifying..."):
            corpus = run_corpus(cfg)
    except QoLctError as e:
        st.error(f"{e.code}: {e.message}")
        return

    result = corpus.to_dict()
    summary = result["summary"]
    c1, c2, c3, c4 = st.columns(4)
    c1.metric("Instances", summary["instances"])
    c2.metric("Checks", summary["checks"])
    c3.metric("Vacuous", summary["vacuous"])
    c4.metric("Failed", summary["failed"])

    frame = pd.DataFrame.from_dict(result["checks_by_name"], orient="index")
    frame.index.name = "check"
    st.dataframe(frame, use_container_width=True)

    if result["failures"]:
        st.error("Some checks failed.")
        st.dataframe(pd.DataFrame(result["failures"]), use_container_width=True)
    else:
        st.success("No failing checks.")

    report_id = archive_report("verify", None, result, status=0 if corpus.ok else 1)
    log_run("verify", report_id=report_id, details=f"seed {cfg.seed}, {cfg.count} instances")

    st.download_button(
        "Download report (.json)",
        data=json.dumps(result, sort_keys=True, indent=2) + "\n",
        file_name=f"verify_seed{cfg.seed}.json",
        mime="application/json"
    )

if __name__ == '__main__':
    main()

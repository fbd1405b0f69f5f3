# -*- coding: utf-8 -*-
"""
Runtime settings for the library defaults and the browser explorer.
The command-line tool does not read these; it is configured by flags only.
"""

import os

from dotenv import load_dotenv

load_dotenv()

# ---------------------------------------------------------------------
# CONFIG
# ---------------------------------------------------------------------
# Tip: on a read-only host set QOLCT_DB_PATH=/tmp/qolct.db
DEFAULT_DB = os.path.join(os.path.dirname(os.path.abspath(__file__)), "qolct.db")
DB_PATH = os.getenv("QOLCT_DB_PATH", DEFAULT_DB)
LOG_LEVEL = os.getenv("QOLCT_LOG_LEVEL", "WARNING").upper()
MAX_REDRAWS = int(os.getenv("QOLCT_MAX_REDRAWS", "1000"))  # generator rejections per level

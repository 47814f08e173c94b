import logging
import os
import sys

from dotenv import load_dotenv

load_dotenv()

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"

SEED = int(os.getenv("LORENTZIAN_SEED", "0"))
TRIALS = int(os.getenv("LORENTZIAN_TRIALS", "1000"))
THREADS = int(os.getenv("LORENTZIAN_THREADS", "1"))
SAMPLE_BITS = int(os.getenv("LORENTZIAN_SAMPLE_BITS", "8"))
GRID = int(os.getenv("LORENTZIAN_GRID", "20"))
GRID_POINTS = int(os.getenv("LORENTZIAN_GRID_POINTS", "20000"))
CLIQUE_LIMIT = int(os.getenv("LORENTZIAN_CLIQUE_LIMIT", "30"))
LOG_LEVEL = os.getenv("LORENTZIAN_LOG_LEVEL", "WARNING")


# -------------------------------------------------
# Logging
# -------------------------------------------------
def configure_logging(level: str | None = None) -> None:
    """Send package logs to stderr; stdout carries reports only."""
    root = logging.getLogger("lorentzian")
    root.setLevel((level or LOG_LEVEL).upper())
    if not any(getattr(h, "_lorentzian", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._lorentzian = True
        root.addHandler(handler)

"""Run the quadratic search for Delta = -652 and print the candidate table as CSV."""

import sys
from pathlib import Path

from artinprimes.cli import main

cfg = Path(__file__).with_name("configs") / "quadratic_652.json"
sys.exit(main(["search", "quadratic", "--config", str(cfg), "--run-length", "--out", "csv"]))

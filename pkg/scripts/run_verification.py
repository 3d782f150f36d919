#!/usr/bin/env python3
"""Run the complete identity-verification battery and archive the reports.

Writes verification_report.json and verification_report.csv next to this
script (or under --outdir) and prints the text summary. Returns exit code 1
if any check fails, so it can gate CI.
"""

import argparse
import sys
from pathlib import Path

from dirichlet_j.cli import run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path(__file__).parent)
    parser.add_argument("--deep", action="store_true", help="1e6-term series checks")
    parser.add_argument("--seed", type=lambda t: int(t, 0), default=0x5EED)
    args = parser.parse_args()

    extra = ["--deep"] if args.deep else []
    extra += ["--seed", str(args.seed)]

    json_path = args.outdir / "verification_report.json"
    csv_path = args.outdir / "verification_report.csv"

    code = run(["verify", "all", "--format", "json", "-o", str(json_path)] + extra)
    code |= run(["verify", "all", "--format", "csv", "-o", str(csv_path)] + extra)
    code |= run(["verify", "all"] + extra)

    print(f"\nreports: {json_path}\n         {csv_path}")
    return code


if __name__ == "__main__":
    sys.exit(main())

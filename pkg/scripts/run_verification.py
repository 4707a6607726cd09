#!/usr/bin/env python3
"""Full cross-validation run: every coefficient path on random elements.

Writes the JSON report to results/verify_report.json and prints a summary.
Equivalent to `cliffchar verify` but with a heavier default trial count.
"""
import argparse
import json
import os
import pathlib
import sys
import time

from cliffchar.cli import main as cli_main


def run(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=int(os.environ.get("CLIFFCHAR_SEED", "7")))
    parser.add_argument("--out", default="results/verify_report.json")
    args = parser.parse_args(argv)

    out_path = pathlib.Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)

    import contextlib
    import io

    buffer = io.StringIO()
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(buffer):
        code = cli_main(
            ["verify", "--max-n", str(args.max_n), "--trials", str(args.trials),
             "--seed", str(args.seed)]
        )
    elapsed = time.perf_counter() - t0

    out_path.write_text(buffer.getvalue())
    report = json.loads(buffer.getvalue())
    total_trials = sum(s["trials"] for s in report["signatures"])
    print(f"signatures: {len(report['signatures'])}  random trials: {total_trials}")
    print(f"golden cases: {report['golden']['cases']}")
    print(f"mismatches: {report['total_mismatches']}")
    print(f"elapsed: {elapsed:.1f}s  report: {out_path}")
    return code


if __name__ == "__main__":
    sys.exit(run())

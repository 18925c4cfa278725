"""Run every verification suite at its default limits and write JSON reports.

    python3 scripts/run_suites.py [--out reports/] [--workers 4]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from bellstir.harness import SUITES, Limits, aggregate, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="reports")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    overall = "pass"
    for name in SUITES:
        t0 = time.perf_counter()
        reports = run_suite(name, Limits(workers=args.workers))
        status = aggregate(reports)
        if status != "pass":
            overall = status
        (out / f"{name}.jsonl").write_text("".join(json.dumps(r.as_dict(), default=str) + "\n" for r in reports))
        print(f"{name:20s} {status:12s} {len(reports):5d} instances  {time.perf_counter() - t0:6.1f}s")
    print(f"overall: {overall}")
    return 0 if overall == "pass" else 1


if __name__ == "__main__":
    raise SystemExit(main())

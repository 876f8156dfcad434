#!/usr/bin/env python3
"""Run the verification suite and write one JSON report per result id.

    python3 scripts/run_verification.py --max-n 4 --out-dir reports/
"""

import argparse
import sys
from pathlib import Path

from semilab.documents import dumps, report_document, write_text
from semilab.theorems import RESULT_IDS, run_result


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--out-dir", default="reports")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("ids", nargs="*", default=list(RESULT_IDS))
    args = p.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for rid in args.ids:
        reports = run_result(rid, args.max_n)
        doc = report_document(rid, args.max_n, reports, timing=not args.no_timing)
        write_text(out / f"{rid}.json", dumps(doc))
        ok &= doc["verdict"] == "pass"
        print(f"{doc['verdict']:4s} {rid:20s} instances={doc['instances']:5d} failures={doc['failures']}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Survey of locals of equal-rank, stabiliser >= 2 elements of T_n.

Prints the per-rank summary of the pairwise isomorphism report and
optionally saves the full report with every witness.
"""

import argparse
import json

from semilab.documents import dumps, report_document, write_text
from semilab.theorems import verify_prop_nonstab1


def main():
    p = argparse.ArgumentParser(description="pairwise isomorphism survey")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--out")
    args = p.parse_args()
    rep = verify_prop_nonstab1(args.n)
    print(json.dumps(rep.summary, indent=1))
    print(f"pairs={rep.instances} witnesses={len(rep.witnesses)} failures={len(rep.failures)} "
          f"inconclusive={rep.inconclusive}")
    if args.out:
        write_text(args.out, dumps(report_document("S2.Prop.nonstab", args.n, [rep])))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Egg-box diagrams of T_3 and the locals of 2432, 2343 and 1123 in T_4.

Writes ASCII and DOT files into the output directory and prints each
profile, so the structural coincidences are visible at a glance.
"""

import argparse
from pathlib import Path

from semilab.documents import write_text
from semilab.elements import parse_one_line
from semilab.green import eggbox_profile
from semilab.render import to_ascii, to_dot
from semilab.semigroup import full_transformation_monoid, local_subsemigroup


def main():
    p = argparse.ArgumentParser(description="render egg-box diagrams")
    p.add_argument("--out-dir", default="figures")
    args = p.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    T4 = full_transformation_monoid(4)
    targets = {"T3": full_transformation_monoid(3)}
    for a in ("2432", "2343", "1123"):
        targets[f"T4_local_{a}"] = local_subsemigroup(T4, parse_one_line(a, kind="total"))

    for name, S in targets.items():
        write_text(out / f"{name}.txt", to_ascii(S))
        write_text(out / f"{name}.dot", to_dot(S))
        print(f"{name:16s} order={len(S):3d} profile={eggbox_profile(S)}")


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 success / isomorphic / verified, 1 negative verdict,
2 usage error, 3 budget or size-guard exhaustion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import render
from .documents import (
    DocumentError,
    dumps,
    read_semigroup,
    report_document,
    to_document,
    write_text,
)
from .elements import parse_one_line
from .iso import DEFAULT_BUDGET, find_isomorphism
from .semigroup import (
    FiniteSemigroup,
    SizeGuardError,
    full_transformation_monoid,
    local_subsemigroup,
    shuffle,
    symmetric_inverse_monoid,
    variant,
)
from .theorems import RESULT_IDS, builtin, run_result

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _load(args) -> FiniteSemigroup:
    if args.builtin and args.input:
        raise UsageError("give either --builtin or --in, not both")
    if args.builtin:
        try:
            return builtin(args.builtin)
        except SizeGuardError:
            raise
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.input:
        return read_semigroup(args.input)
    raise UsageError("one of --builtin or --in is required")


def _element(S: FiniteSemigroup, text: str) -> int:
    """Resolve ``--elem``: one-line map notation, an abstract label, or ``#index``."""
    if text.startswith("#"):
        try:
            return S.index(int(text[1:]))
        except (ValueError, IndexError) as exc:
            raise UsageError(str(exc)) from None
    kind = S.kind
    try:
        if kind == "transformation":
            x = parse_one_line(text, S.elements[0].degree, "total")
        elif kind == "partial-permutation":
            x = parse_one_line(text, S.elements[0].degree, "partial")
        else:
            labels = [S.label(i) for i in range(len(S))]
            if text not in labels:
                raise ValueError(f"no element labelled {text!r}")
            return labels.index(text)
        return S.index(x)
    except ValueError as exc:
        raise UsageError(f"--elem {text!r}: {exc}") from None


def _semigroup_arg(spec: str) -> FiniteSemigroup:
    if os.path.exists(spec):
        return read_semigroup(spec)
    try:
        return builtin(spec)
    except SizeGuardError:
        raise
    except ValueError:
        raise UsageError(f"{spec!r} is neither a file nor a builtin name") from None


def cmd_gen(args) -> int:
    make = full_transformation_monoid if args.kind == "tn" else symmetric_inverse_monoid
    S = make(args.n)
    _emit(dumps(to_document(S)), args.out)
    return EXIT_OK


def cmd_local(args) -> int:
    S = _load(args)
    L = local_subsemigroup(S, _element(S, args.elem))
    _emit(dumps(to_document(L)), args.out)
    return EXIT_OK


def cmd_variant(args) -> int:
    S = _load(args)
    V = variant(S, _element(S, args.elem))
    _emit(dumps(to_document(V)), args.out)
    return EXIT_OK


def cmd_eggbox(args) -> int:
    S = _load(args)
    if args.elem:
        S = local_subsemigroup(S, _element(S, args.elem))
    if args.format == "ascii":
        text = render.to_ascii(S)
    elif args.format == "dot":
        text = render.to_dot(S)
    else:
        text = dumps(render.to_json_obj(S))
    _emit(text, args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    A, B = _semigroup_arg(args.a), _semigroup_arg(args.b)
    res = find_isomorphism(A, B, args.budget)
    doc = {"format_version": 1, "a": args.a, "b": args.b, **res.to_dict()}
    _emit(dumps(doc), args.out)
    return {"isomorphic": EXIT_OK, "not-isomorphic": EXIT_NEGATIVE}.get(res.verdict, EXIT_GUARD)


def cmd_verify(args) -> int:
    if args.result_id != "all" and args.result_id not in RESULT_IDS:
        raise UsageError(f"unknown result id {args.result_id!r}; known: all, {', '.join(RESULT_IDS)}")
    reports = run_result(args.result_id, args.max_n)
    doc = report_document(args.result_id, args.max_n, reports, timing=not args.no_timing)
    _emit(dumps(doc), args.out)
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"{status} {r.result_id} {json.dumps(r.params)} instances={r.instances} "
              f"failures={len(r.failures)}", file=sys.stderr)
    if doc["inconclusive"]:
        return EXIT_GUARD
    return EXIT_OK if doc["verdict"] == "pass" else EXIT_NEGATIVE


def cmd_selftest(args) -> int:
    """Isomorphism search against random index shuffles of a semigroup."""
    S = _load(args)
    rng = np.random.default_rng(args.seed)
    results = []
    for _ in range(args.count):
        T, perm = shuffle(S, rng)
        res = find_isomorphism(S, T, args.budget)
        results.append(res.verdict)
    doc = {"format_version": 1, "semigroup": S.name, "seed": args.seed, "verdicts": results}
    _emit(dumps(doc), args.out)
    return EXIT_OK if all(v == "isomorphic" for v in results) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semilab", description="Finite semigroup toolkit: T_n, IS_n, "
                                "local subsemigroups, variants, egg-boxes, isomorphism.")
    sub = p.add_subparsers(dest="command", required=True)

    def source(sp):
        sp.add_argument("--builtin", help="builtin semigroup, e.g. tn3 or isn2")
        sp.add_argument("--in", dest="input", help="semigroup JSON document")

    sp = sub.add_parser("gen", help="enumerate T_n or IS_n")
    sp.add_argument("kind", choices=["tn", "isn"])
    sp.add_argument("n", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    for name, func, helptext in (("local", cmd_local, "local subsemigroup aSa"),
                                 ("variant", cmd_variant, "variant under x*y = xay")):
        sp = sub.add_parser(name, help=helptext)
        source(sp)
        sp.add_argument("--elem", required=True, help="one-line map, label, or #index")
        sp.add_argument("--out")
        sp.set_defaults(func=func)

    sp = sub.add_parser("eggbox", help="egg-box diagram")
    source(sp)
    sp.add_argument("--elem", help="draw the local subsemigroup of this element instead")
    sp.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_eggbox)

    sp = sub.add_parser("iso", help="isomorphism test of two semigroups")
    sp.add_argument("a", help="JSON document or builtin name")
    sp.add_argument("b", help="JSON document or builtin name")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("verify", help="run the exhaustive verification suite")
    sp.add_argument("result_id", help=f"all or one of: {', '.join(RESULT_IDS)}")
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--out")
    sp.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("selftest", help="isomorphism search against shuffled copies")
    source(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"semilab: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, DocumentError, FileNotFoundError) as exc:
        print(f"semilab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

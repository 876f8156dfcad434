"""JSON interchange for semigroups and verification reports.

Semigroup document (UTF-8 JSON)::

    {
      "format_version": 1,
      "kind": "transformation" | "partial-permutation" | "abstract-table",
      "name": "T3",
      "degree": 3,                # null for abstract tables
      "elements": ["111", ...],   # one-line maps (1-based points) or labels
      "table": [[0, 0, ...], ...],# 0-based element indices, row * column
      "provenance": {...}
    }

Variants of map semigroups are written as abstract tables: their product is
not composition of the listed maps.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .elements import parse_one_line
from .semigroup import (
    FiniteSemigroup,
    Provenance,
    check_associative,
    map_table,
)

FORMAT_VERSION = 1
_SANDWICHED = {"variant", "sandwich"}


class DocumentError(ValueError):
    pass


def to_document(S: FiniteSemigroup) -> dict:
    kind = S.kind
    if S.provenance.construction in _SANDWICHED:
        kind = "abstract-table"
    degree = S.elements[0].degree if kind != "abstract-table" and len(S) else None
    return {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "name": S.name,
        "degree": degree,
        "elements": [S.label(i) for i in range(len(S))],
        "table": S.table.tolist(),
        "provenance": S.provenance.to_dict(),
    }


def from_document(doc: dict) -> FiniteSemigroup:
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc.get('format_version')!r}")
    kind = doc["kind"]
    labels = doc["elements"]
    prov = Provenance.from_dict(doc["provenance"]) if doc.get("provenance") else Provenance("table")
    table = doc.get("table")
    if kind in ("transformation", "partial-permutation"):
        pk = "total" if kind == "transformation" else "partial"
        elements = [parse_one_line(e, doc.get("degree"), pk) for e in labels]
        computed = map_table(elements)
        if table is not None and not np.array_equal(np.asarray(table), computed):
            raise DocumentError("stored table disagrees with composition")
        return FiniteSemigroup(elements, computed, doc.get("name", ""), prov)
    if kind == "abstract-table":
        if table is None:
            raise DocumentError("abstract-table documents need a table")
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (len(labels), len(labels)):
            raise DocumentError("table shape does not match the element list")
        try:
            check_associative(table)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        return FiniteSemigroup(labels, table, doc.get("name", ""), prov)
    raise DocumentError(f"unknown kind {kind!r}")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def write_text(path, text: str) -> None:
    """Write atomically: temp file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_semigroup(S: FiniteSemigroup, path) -> None:
    write_text(path, dumps(to_document(S)))


def read_semigroup(path) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return from_document(json.load(fh))


def report_document(result_id: str, max_n: int, reports: list, timing: bool = True) -> dict:
    """Aggregate verification reports; field order is fixed."""
    failures = sum(len(r.failures) for r in reports)
    inconclusive = sum(r.inconclusive for r in reports)
    doc = {
        "format_version": FORMAT_VERSION,
        "result_id": result_id,
        "max_n": max_n,
        "verdict": "pass" if not failures and not inconclusive else "fail",
        "instances": sum(r.instances for r in reports),
        "failures": failures,
        "inconclusive": inconclusive,
        "reports": [r.to_dict(timing) for r in reports],
    }
    if timing:
        doc["elapsed"] = round(sum(r.elapsed for r in reports), 3)
    return doc

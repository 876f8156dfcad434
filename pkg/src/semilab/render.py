"""Text renderings of egg-box diagrams: ASCII grids, Graphviz DOT, JSON."""

from __future__ import annotations

from .green import EggBox, eggbox
from .semigroup import FiniteSemigroup


def _cell_text(S: FiniteSemigroup, cell, idem: set) -> str:
    return ", ".join(S.label(x) + ("*" if x in idem else "") for x in cell)


def to_ascii(S: FiniteSemigroup, box: EggBox = None) -> str:
    """One bordered grid per D-class, largest first; idempotents end in ``*``."""
    box = box or eggbox(S)
    blocks = []
    for grid in box.grids:
        idem = set(grid.idempotents)
        texts = [[_cell_text(S, cell, idem) for cell in row] for row in grid.cells]
        widths = [max(len(texts[r][c]) for r in range(grid.rows)) for c in range(grid.cols)]
        rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        lines = [rule]
        for row in texts:
            lines.append("| " + " | ".join(t.ljust(w) for t, w in zip(row, widths)) + " |")
            lines.append(rule)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(S: FiniteSemigroup, box: EggBox = None) -> str:
    """One cluster per D-class and one box node per H-class."""
    box = box or eggbox(S)
    out = ["digraph eggbox {", "  node [shape=box, fontname=monospace];", "  rankdir=TB;"]
    for d, grid in enumerate(box.grids):
        idem = set(grid.idempotents)
        out.append(f"  subgraph cluster_{d} {{")
        out.append(f'    label="D{d}: {grid.rows}x{grid.cols}, H-classes of {grid.cell_size}";')
        for r, row in enumerate(grid.cells):
            names = []
            for c, cell in enumerate(row):
                name = f"d{d}_{r}_{c}"
                names.append(name)
                text = _dot_escape(f"{r + 1}x{c + 1}: {_cell_text(S, cell, idem)}")
                out.append(f'    {name} [label="{text}"];')
            out.append("    { rank=same; " + "; ".join(names) + "; }")
        # invisible edges keep rows stacked in order
        for r in range(grid.rows - 1):
            out.append(f"    d{d}_{r}_0 -> d{d}_{r + 1}_0 [style=invis];")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def to_json_obj(S: FiniteSemigroup, box: EggBox = None) -> dict:
    box = box or eggbox(S)
    return {
        "order": len(S),
        "dclasses": [
            {
                "rows": g.rows,
                "cols": g.cols,
                "cells": [[[S.label(x) for x in cell] for cell in row] for row in g.cells],
                "idempotents": [S.label(x) for x in g.idempotents],
            }
            for g in box.grids
        ],
    }

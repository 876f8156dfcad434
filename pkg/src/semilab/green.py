"""Green's relations and egg-box layouts of a finite semigroup."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .semigroup import FiniteSemigroup


@dataclass(frozen=True)
class GreenStructure:
    """Each relation is stored as a class-id per element plus the classes.

    Classes are tuples of element indices, sorted, and listed in order of
    their least element.
    """

    L: tuple
    R: tuple
    H: tuple
    D: tuple
    J: tuple
    l_of: tuple
    r_of: tuple
    h_of: tuple
    d_of: tuple
    idempotent: tuple
    group_h: tuple  # per H-class: contains an idempotent


def _classes_from_rows(rows: np.ndarray) -> tuple:
    """Group indices with identical boolean rows."""
    ids: dict = {}
    of = []
    for x in range(rows.shape[0]):
        key = rows[x].tobytes()
        of.append(ids.setdefault(key, len(ids)))
    return _classes_from_ids(of)


def _classes_from_ids(of) -> tuple:
    groups: dict = {}
    for x, c in enumerate(of):
        groups.setdefault(c, []).append(x)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])
    class_of = [0] * len(of)
    for ci, c in enumerate(classes):
        for x in c:
            class_of[x] = ci
    return tuple(classes), tuple(class_of)


def principal_ideals(S: FiniteSemigroup) -> tuple:
    """Boolean matrices of S¹x, xS¹ and S¹xS¹ (row x)."""
    k = len(S)
    eye = np.eye(k, dtype=bool)
    left = eye.copy()
    right = eye.copy()
    rows = np.arange(k)[:, None]
    left[rows, S.table.T] = True  # Sx is column x of the table
    right[rows, S.table] = True  # x S : row x
    # S¹xS¹ = union of uS¹ over u in S¹x
    two = (left.astype(np.float32) @ right.astype(np.float32)) > 0
    return left, right, two


def green_classes(S: FiniteSemigroup) -> GreenStructure:
    k = len(S)
    left, right, two = principal_ideals(S)
    L, l_of = _classes_from_rows(left)
    R, r_of = _classes_from_rows(right)
    H, h_of = _classes_from_ids([(l_of[x], r_of[x]) for x in range(k)])
    J, j_of = _classes_from_rows(two)

    # D as the join of L and R
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in L + R:
        root = find(cls[0])
        for x in cls[1:]:
            rx = find(x)
            if rx != root:
                parent[rx] = root
    D, d_of = _classes_from_ids([find(x) for x in range(k)])
    if D != J:
        raise RuntimeError("D and J differ; the table cannot come from a finite semigroup")

    idem = tuple(bool(S.table[x, x] == x) for x in range(k))
    group_h = tuple(any(idem[x] for x in h) for h in H)
    return GreenStructure(L, R, H, D, J, l_of, r_of, h_of, d_of, idem, group_h)


@dataclass(frozen=True)
class DClassGrid:
    rows: int
    cols: int
    cells: tuple  # cells[r][c] is a tuple of element indices
    idempotents: tuple  # idempotent indices in this D-class

    @property
    def size(self) -> int:
        return sum(len(cell) for row in self.cells for cell in row)

    @property
    def cell_size(self) -> int:
        return len(self.cells[0][0])


@dataclass(frozen=True)
class EggBox:
    grids: tuple

    @property
    def total(self) -> int:
        return sum(g.size for g in self.grids)


def eggbox(S: FiniteSemigroup, green: GreenStructure = None) -> EggBox:
    """Per D-class grid, R-classes as rows and L-classes as columns.

    D-classes come largest first, ties broken by least element; rows and
    columns are ordered by least element.
    """
    g = green or green_classes(S)
    order = sorted(range(len(g.D)), key=lambda i: (-len(g.D[i]), g.D[i][0]))
    grids = []
    for di in order:
        d = g.D[di]
        r_ids = sorted({g.r_of[x] for x in d}, key=lambda r: g.R[r][0])
        l_ids = sorted({g.l_of[x] for x in d}, key=lambda l: g.L[l][0])
        cells = tuple(
            tuple(tuple(sorted(set(g.R[r]) & set(g.L[l]))) for l in l_ids) for r in r_ids
        )
        idem = tuple(x for x in d if g.idempotent[x])
        grids.append(DClassGrid(len(r_ids), len(l_ids), cells, idem))
    return EggBox(tuple(grids))


def eggbox_profile(S: FiniteSemigroup, box: EggBox = None) -> tuple:
    """Sorted multiset of (rows, cols, cell size, idempotent count) per D-class."""
    box = box or eggbox(S)
    return tuple(sorted((gr.rows, gr.cols, gr.cell_size, len(gr.idempotents)) for gr in box.grids))


def idempotents(S: FiniteSemigroup) -> list:
    return [x for x in range(len(S)) if S.table[x, x] == x]


def regular_elements(S: FiniteSemigroup) -> list:
    """Indices x having some y with xyx = x (then yxy is an inverse of x)."""
    out = []
    for x in range(len(S)):
        xy = S.table[x]  # x·y for all y
        if (S.table[xy, x] == x).any():
            out.append(x)
    return out


def is_regular(S: FiniteSemigroup) -> bool:
    return len(regular_elements(S)) == len(S)


def mutual_inverse_pairs(S: FiniteSemigroup) -> list:
    """All (a, b) with aba = a and bab = b."""
    t = S.table
    k = len(S)
    pairs = []
    for a in range(k):
        ab = t[a]  # a·b over b
        aba = t[ab, a]
        bab = t[np.arange(k), a]  # b·a over b
        bab = t[bab, np.arange(k)]
        for b in np.flatnonzero((aba == a) & (bab == np.arange(k))):
            pairs.append((a, int(b)))
    return pairs


def d_class_sizes(S: FiniteSemigroup, green: GreenStructure = None) -> tuple:
    g = green or green_classes(S)
    return tuple(sorted(len(d) for d in g.D))

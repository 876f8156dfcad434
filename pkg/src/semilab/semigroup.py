"""Finite semigroups as Cayley tables.

A :class:`FiniteSemigroup` stores an indexed element list and a k x k table of
indices, ``table[i, j]`` being the index of ``elements[i] * elements[j]``.
Elements are concrete maps from :mod:`semilab.elements` or opaque labels.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .elements import (
    PartialPermutation,
    Transformation,
    compose,
    to_one_line,
)

T_MAX_DEGREE = 5
IS_MAX_DEGREE = 5
ASSOC_EXHAUSTIVE_BOUND = 300
ASSOC_SAMPLES = 1_000_000
DEFAULT_MAX_TABLE = 4096


class SizeGuardError(ValueError):
    """A construction would exceed one of the size guards."""


def max_table_size() -> int:
    return int(os.environ.get("SEMILAB_MAX_TABLE", DEFAULT_MAX_TABLE))


@dataclass(frozen=True)
class Provenance:
    construction: str  # full | inverse-monoid | closure | local | variant | sandwich | relabel | table
    parent: Optional[str] = None
    pivot: Optional[int] = None
    pivot_label: Optional[str] = None
    parent_indices: Optional[tuple] = None
    assoc_check: str = "exhaustive"

    def to_dict(self) -> dict:
        d = {
            "construction": self.construction,
            "parent": self.parent,
            "pivot": self.pivot,
            "pivot_label": self.pivot_label,
            "parent_indices": None if self.parent_indices is None else list(self.parent_indices),
            "assoc_check": self.assoc_check,
        }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Provenance":
        d = dict(d)
        if d.get("parent_indices") is not None:
            d["parent_indices"] = tuple(d["parent_indices"])
        return cls(**d)


@dataclass(eq=False)
class FiniteSemigroup:
    elements: tuple
    table: np.ndarray
    name: str = ""
    provenance: Provenance = field(default_factory=lambda: Provenance("table"))

    def __post_init__(self):
        self.elements = tuple(self.elements)
        self.table = np.asarray(self.table, dtype=np.int64)
        k = len(self.elements)
        if self.table.shape != (k, k):
            raise ValueError(f"table shape {self.table.shape} does not match order {k}")
        if k and (self.table.min() < 0 or self.table.max() >= k):
            raise ValueError("table entries out of range")
        self.table.setflags(write=False)
        self._index = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        """Index of an element; integers are taken as indices already."""
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < len(self):
                raise IndexError(f"element index {x} out of range")
            return int(x)
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"{x} is not an element of {self.name or 'the semigroup'}") from None

    def __contains__(self, x) -> bool:
        try:
            self.index(x)
        except (ValueError, IndexError):
            return False
        return True

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def label(self, i: int) -> str:
        e = self.elements[i]
        if isinstance(e, (Transformation, PartialPermutation)):
            return to_one_line(e)
        return str(e)

    @property
    def kind(self) -> str:
        if self.elements and all(isinstance(e, Transformation) for e in self.elements):
            return "transformation"
        if self.elements and all(isinstance(e, PartialPermutation) for e in self.elements):
            return "partial-permutation"
        return "abstract-table"

    def identity(self) -> Optional[int]:
        k = len(self)
        rng = np.arange(k)
        for e in range(k):
            if np.array_equal(self.table[e], rng) and np.array_equal(self.table[:, e], rng):
                return e
        return None

    def element_set(self) -> frozenset:
        return frozenset(self.elements)


# ---------------------------------------------------------------------------
# table construction and checks


def _encode(arrays: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(arrays.shape[-1] - 1, -1, -1, dtype=np.int64)
    return arrays @ weights


def map_table(elements: Sequence) -> np.ndarray:
    """Cayley table of a multiplication-closed list of same-degree maps."""
    k = len(elements)
    if k == 0:
        return np.zeros((0, 0), dtype=np.int64)
    n = elements[0].degree
    arrs = np.stack([e.as_array() for e in elements])  # k x (n+1), 0 is the sink
    codes = _encode(arrs, n + 1)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    table = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        prods = arrs[:, arrs[i]]  # row j: x -> e_j(e_i(x))
        pc = _encode(prods, n + 1)
        pos = np.searchsorted(sorted_codes, pc)
        pos = np.minimum(pos, k - 1)
        if not np.array_equal(sorted_codes[pos], pc):
            raise ValueError("element list is not closed under composition")
        table[i] = order[pos]
    return table


def check_associative(table: np.ndarray, bound: int = ASSOC_EXHAUSTIVE_BOUND, seed: int = 0) -> str:
    """Raise if the table is not associative.

    Exhaustive up to ``bound`` elements; larger tables are spot-checked on
    random triples.  Returns ``"exhaustive"`` or ``"sampled"``.
    """
    k = table.shape[0]
    if k <= bound:
        for x in range(k):
            left = table[table[x]]  # (xy)z as [y, z]
            right = table[x][table]  # x(yz) as [y, z]
            if not np.array_equal(left, right):
                y, z = np.argwhere(left != right)[0]
                raise ValueError(f"not associative at ({x}, {y}, {z})")
        return "exhaustive"
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, k, size=(3, ASSOC_SAMPLES))
    bad = table[table[x, y], z] != table[x, table[y, z]]
    if bad.any():
        i = int(np.argmax(bad))
        raise ValueError(f"not associative at ({x[i]}, {y[i]}, {z[i]})")
    return "sampled"


def from_maps(elements: Sequence, name: str = "", provenance: Provenance = None) -> FiniteSemigroup:
    elements = list(elements)
    if len(elements) > max_table_size():
        raise SizeGuardError(f"order {len(elements)} exceeds SEMILAB_MAX_TABLE={max_table_size()}")
    table = map_table(elements)
    prov = provenance or Provenance("table")
    return FiniteSemigroup(elements, table, name, prov)


def from_table(table, labels: Sequence = None, name: str = "", provenance: Provenance = None,
               check: bool = True) -> FiniteSemigroup:
    table = np.asarray(table, dtype=np.int64)
    k = table.shape[0]
    labels = list(labels) if labels is not None else [str(i) for i in range(k)]
    prov = provenance or Provenance("table")
    if check:
        prov = replace(prov, assoc_check=check_associative(table))
    return FiniteSemigroup(labels, table, name, prov)


# ---------------------------------------------------------------------------
# the two families


def full_transformation_monoid(n: int) -> FiniteSemigroup:
    """T_n in lexicographic image-sequence order."""
    if not 1 <= n <= T_MAX_DEGREE:
        raise SizeGuardError(f"full_transformation_monoid needs 1 <= n <= {T_MAX_DEGREE}, got {n}")
    elements = [Transformation(imgs) for imgs in itertools.product(range(1, n + 1), repeat=n)]
    return from_maps(elements, f"T{n}", Provenance("full"))


def _partial_perms(n: int):
    # all injective partial maps, lexicographic with "undefined" first
    def rec(prefix, used):
        if len(prefix) == n:
            yield PartialPermutation(prefix)
            return
        yield from rec(prefix + (None,), used)
        for v in range(1, n + 1):
            if v not in used:
                yield from rec(prefix + (v,), used | {v})

    yield from rec((), frozenset())


def symmetric_inverse_monoid(n: int) -> FiniteSemigroup:
    if not 0 <= n <= IS_MAX_DEGREE:
        raise SizeGuardError(f"symmetric_inverse_monoid needs 0 <= n <= {IS_MAX_DEGREE}, got {n}")
    return from_maps(list(_partial_perms(n)), f"IS{n}", Provenance("inverse-monoid"))


def predicted_local_order(kind: str, m: int) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    if kind == "T":
        if m == 0:
            raise ValueError("T_0 is not defined")
        return m ** m
    if kind == "IS":
        return sum(math.comb(m, k) ** 2 * math.factorial(k) for k in range(m + 1))
    raise ValueError(f"unknown kind {kind!r}")


def closure_from_generators(gens: Sequence, budget: int = None, name: str = "") -> FiniteSemigroup:
    """Breadth-first saturation of a generating set under right multiplication."""
    gens = list(dict.fromkeys(gens))
    if not gens:
        raise ValueError("need at least one generator")
    kind, deg = type(gens[0]), gens[0].degree
    if any(type(g) is not kind or g.degree != deg for g in gens):
        raise ValueError("generators must share kind and degree")
    budget = budget or max_table_size()
    seen = {g: i for i, g in enumerate(gens)}
    elements = list(gens)
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                if len(elements) >= budget:
                    raise SizeGuardError(f"closure exceeds size budget {budget}")
                seen[y] = len(elements)
                elements.append(y)
        i += 1
    return from_maps(elements, name, Provenance("closure"))


def index_closure(S: FiniteSemigroup, gens: Sequence[int]) -> list:
    """Subsemigroup generated by element indices, in discovery order."""
    gens = list(dict.fromkeys(int(g) for g in gens))
    seen = set(gens)
    out = list(gens)
    i = 0
    while i < len(out):
        row = S.table[out[i]]
        for g in gens:
            y = int(row[g])
            if y not in seen:
                seen.add(y)
                out.append(y)
        i += 1
    return out


def subsemigroup(S: FiniteSemigroup, indices: Sequence[int], name: str = "",
                 provenance: Provenance = None) -> FiniteSemigroup:
    """Induced table on a multiplication-closed set of indices (kept in the given order)."""
    idx = np.asarray(list(indices), dtype=np.int64)
    lookup = np.full(len(S), -1, dtype=np.int64)
    lookup[idx] = np.arange(len(idx))
    sub = lookup[S.table[np.ix_(idx, idx)]]
    if (sub < 0).any():
        raise ValueError("index set is not closed under multiplication")
    prov = provenance or Provenance("table", parent=S.name)
    prov = replace(prov, parent_indices=tuple(int(i) for i in idx))
    return FiniteSemigroup([S.elements[i] for i in idx], sub, name, prov)


def local_subsemigroup(S: FiniteSemigroup, a) -> FiniteSemigroup:
    """aSa = {a x a : x in S}, elements in order of first appearance over x."""
    ai = S.index(a)
    products = S.table[S.table[ai], ai]
    idx = list(dict.fromkeys(int(p) for p in products))
    prov = Provenance("local", parent=S.name, pivot=ai, pivot_label=S.label(ai))
    return subsemigroup(S, idx, f"{S.name}[{S.label(ai)}]local", prov)


def variant(S: FiniteSemigroup, a) -> FiniteSemigroup:
    """S under the sandwich product x * y = x a y."""
    ai = S.index(a)
    table = S.table[S.table[:, ai]]  # row x is the row of x·a
    check = check_associative(table)
    prov = Provenance("variant", parent=S.name, pivot=ai, pivot_label=S.label(ai), assoc_check=check)
    return FiniteSemigroup(S.elements, table, f"{S.name}^{S.label(ai)}", prov)


def sandwich_restriction(S: FiniteSemigroup, indices: Sequence[int], p) -> FiniteSemigroup:
    """A subset of S under x * y = x p y; the subset must be closed for it."""
    pi = S.index(p)
    idx = np.asarray(list(indices), dtype=np.int64)
    lookup = np.full(len(S), -1, dtype=np.int64)
    lookup[idx] = np.arange(len(idx))
    xp = S.table[idx, pi]
    sub = lookup[S.table[np.ix_(xp, idx)]]
    if (sub < 0).any():
        raise ValueError("index set is not closed under the sandwich product")
    check = check_associative(sub)
    prov = Provenance("sandwich", parent=S.name, pivot=pi, pivot_label=S.label(pi),
                      parent_indices=tuple(int(i) for i in idx), assoc_check=check)
    return FiniteSemigroup([S.elements[i] for i in idx], sub, f"{S.name}(sandwich {S.label(pi)})", prov)


def restrict_to_subset(S: FiniteSemigroup, points) -> FiniteSemigroup:
    """All partial permutations of S living on ``points`` (the copy of IS_A)."""
    pts = frozenset(points)
    idx = [i for i, e in enumerate(S.elements) if e.domain() <= pts and e.image() <= pts]
    prov = Provenance("restrict", parent=S.name, pivot_label=",".join(map(str, sorted(pts))))
    return subsemigroup(S, idx, f"{S.name}|{sorted(pts)}", prov)


def local_of_partial(alpha: PartialPermutation) -> FiniteSemigroup:
    """alpha IS_n alpha for alpha of degree n, without enumerating IS_n.

    alpha x alpha only depends on x restricted to ran(alpha) -> dom(alpha), so
    it suffices to run x over partial bijections between those two sets.
    """
    n = alpha.degree
    src = sorted(alpha.image())
    dst = sorted(alpha.domain())
    seen = {}
    for k in range(len(src) + 1):
        for sub in itertools.combinations(src, k):
            for tgt in itertools.permutations(dst, k):
                x = PartialPermutation(dict(zip(sub, tgt)).get(p) for p in range(1, n + 1))
                y = compose(compose(alpha, x), alpha)
                seen.setdefault(y, None)
    elements = sorted(seen)
    prov = Provenance("local", parent=f"IS{n}", pivot_label=to_one_line(alpha))
    return from_maps(elements, f"IS{n}[{to_one_line(alpha)}]local", prov)


def relabel_indices(S: FiniteSemigroup, perm: Sequence[int], name: str = "") -> FiniteSemigroup:
    """Copy of S where old element i sits at index perm[i]."""
    perm = np.asarray(perm, dtype=np.int64)
    k = len(S)
    inv = np.empty(k, dtype=np.int64)
    inv[perm] = np.arange(k)
    table = perm[S.table[np.ix_(inv, inv)]]
    elements = [S.elements[i] for i in inv]
    return FiniteSemigroup(elements, table, name or f"{S.name}(shuffled)", Provenance("relabel", parent=S.name))


def shuffle(S: FiniteSemigroup, rng: np.random.Generator) -> tuple:
    """Random index shuffle; returns the copy and the map old index -> new index."""
    perm = rng.permutation(len(S))
    return relabel_indices(S, perm), perm


def idempotent_indices(S: FiniteSemigroup) -> list:
    k = len(S)
    return [i for i in range(k) if S.table[i, i] == i]


def units(S: FiniteSemigroup) -> list:
    """(unit, inverse) index pairs; empty when S has no identity."""
    e = S.identity()
    if e is None:
        return []
    out = []
    for a in range(len(S)):
        inv = np.flatnonzero((S.table[a] == e) & (S.table[:, a] == e))
        if len(inv):
            out.append((a, int(inv[0])))
    return out

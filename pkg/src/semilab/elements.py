"""Transformations and partial permutations of {1..n}.

Composition is left to right (right action): in ``compose(f, g)`` the point
``x`` goes to ``g(f(x))``.  Points are 1-based; ``None`` marks an undefined
image of a partial permutation, written ``-`` in one-line notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

UNDEFINED_MARK = "-"


class _Map:
    images: tuple

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int):
        return self.images[x - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self) -> str:
        return to_one_line(self)

    def image(self) -> frozenset:
        return frozenset(v for v in self.images if v is not None)

    def rank(self) -> int:
        return len(self.image())

    def as_array(self) -> np.ndarray:
        """Map on {0..n} with 0 fixed, 0 standing for "undefined"."""
        return np.array([0] + [0 if v is None else v for v in self.images], dtype=np.int64)


@dataclass(frozen=True, order=True)
class Transformation(_Map):
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        n = len(self.images)
        if n < 1:
            raise ValueError("a transformation needs degree >= 1")
        for v in self.images:
            if not 1 <= v <= n:
                raise ValueError(f"image {v} outside 1..{n}")

    def kernel_partition(self) -> tuple:
        """Fibers of the map, each sorted, ordered by their least point."""
        fibers: dict = {}
        for x, v in enumerate(self.images, start=1):
            fibers.setdefault(v, []).append(x)
        return tuple(sorted(tuple(b) for b in fibers.values()))


@dataclass(frozen=True)
class PartialPermutation(_Map):
    images: tuple

    def __post_init__(self):
        imgs = tuple(None if v is None else int(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        n = len(imgs)
        defined = [v for v in imgs if v is not None]
        for v in defined:
            if not 1 <= v <= n:
                raise ValueError(f"image {v} outside 1..{n}")
        if len(set(defined)) != len(defined):
            raise ValueError("partial permutation is not injective")

    def _key(self):
        return tuple(0 if v is None else v for v in self.images)

    def __lt__(self, other):
        return self._key() < other._key()

    def domain(self) -> frozenset:
        return frozenset(x for x, v in enumerate(self.images, start=1) if v is not None)

    def pairs(self) -> dict:
        return {x: v for x, v in enumerate(self.images, start=1) if v is not None}


Map = Union[Transformation, PartialPermutation]


def identity(n: int) -> Transformation:
    return Transformation(range(1, n + 1))


def partial_identity(points: Iterable[int], n: int) -> PartialPermutation:
    """The idempotent 1_A of IS_n."""
    pts = set(points)
    return PartialPermutation(x if x in pts else None for x in range(1, n + 1))


def empty_map(n: int) -> PartialPermutation:
    return PartialPermutation((None,) * n)


def partial_from_pairs(pairs: dict, n: int) -> PartialPermutation:
    return PartialPermutation(pairs.get(x) for x in range(1, n + 1))


def _tokens(text) -> list:
    if not isinstance(text, str):
        return [str(t) for t in text]
    text = text.strip().strip("()[]")
    if " " in text or "," in text:
        return text.replace(",", " ").split()
    return list(text)


def parse_one_line(text: Union[str, Sequence], degree: int = None, kind: str = "total") -> Map:
    """Parse one-line notation such as ``"2432"`` or ``"-1-"``.

    Entries may also be separated by spaces or commas, which is required
    for degree 10 and above.  ``kind`` is ``"total"`` or ``"partial"``.
    """
    toks = _tokens(text)
    if degree is not None and len(toks) != degree:
        raise ValueError(f"expected {degree} entries, got {len(toks)} in {text!r}")
    if kind == "total":
        if UNDEFINED_MARK in toks:
            raise ValueError("undefined entries are only allowed for partial maps")
        return Transformation(int(t) for t in toks)
    if kind == "partial":
        return PartialPermutation(None if t == UNDEFINED_MARK else int(t) for t in toks)
    raise ValueError(f"unknown kind {kind!r}")


def to_one_line(f: Map) -> str:
    toks = [UNDEFINED_MARK if v is None else str(v) for v in f.images]
    sep = "" if f.degree <= 9 else " "
    return sep.join(toks)


def _check_pair(f: Map, g: Map) -> None:
    if type(f) is not type(g):
        raise TypeError("cannot compose a transformation with a partial permutation")
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")


def compose(f: Map, g: Map) -> Map:
    """Apply ``f`` first, then ``g``."""
    _check_pair(f, g)
    if isinstance(f, Transformation):
        return Transformation(g.images[v - 1] for v in f.images)
    return PartialPermutation(None if v is None else g.images[v - 1] for v in f.images)


def image(f: Map) -> frozenset:
    return f.image()


def rank(f: Map) -> int:
    return f.rank()


def domain(p: PartialPermutation) -> frozenset:
    return p.domain()


def kernel_partition(f: Transformation) -> tuple:
    return f.kernel_partition()


def power(f: Map, k: int) -> Map:
    if k < 1:
        raise ValueError("power needs k >= 1")
    result = f
    for _ in range(k - 1):
        result = compose(result, f)
    return result


def _image_chain(f: Map):
    current = f
    while True:
        yield current.image()
        current = compose(current, f)


def stabiliser_index(f: Map) -> int:
    """Least s >= 1 with im(f^s) = im(f^(s+1))."""
    chain = _image_chain(f)
    prev = next(chain)
    s = 1
    for nxt in chain:
        if nxt == prev:
            return s
        prev = nxt
        s += 1


def stable_image(f: Map) -> frozenset:
    return power(f, stabiliser_index(f)).image()


def invert(p: PartialPermutation) -> PartialPermutation:
    inv = {v: x for x, v in p.pairs().items()}
    return partial_from_pairs(inv, p.degree)


def is_idempotent(f: Map) -> bool:
    return compose(f, f) == f


def embed(p: PartialPermutation, n: int) -> PartialPermutation:
    """View ``p`` as a partial permutation of the larger set {1..n}."""
    if n < p.degree:
        raise ValueError("cannot embed into a smaller degree")
    return PartialPermutation(p.images + (None,) * (n - p.degree))


def relabel(p: PartialPermutation, points: Sequence[int]) -> PartialPermutation:
    """Restrict ``p`` to ``points`` and rename them 1..len(points) in order.

    ``p`` must have domain and range inside ``points``.
    """
    pts = sorted(points)
    pos = {x: i for i, x in enumerate(pts, start=1)}
    pairs = p.pairs()
    if not set(pairs) <= set(pts) or not set(pairs.values()) <= set(pts):
        raise ValueError(f"{p} does not live on {pts}")
    return partial_from_pairs({pos[x]: pos[v] for x, v in pairs.items()}, len(pts))


def unrelabel(p: PartialPermutation, points: Sequence[int], n: int) -> PartialPermutation:
    """Inverse of :func:`relabel`: push ``p`` back onto ``points`` inside degree ``n``."""
    pts = sorted(points)
    return partial_from_pairs({pts[x - 1]: pts[v - 1] for x, v in p.pairs().items()}, n)


def conjugate(f: Map, sigma: Sequence[int]) -> Map:
    """sigma^-1 f sigma, i.e. ``f`` with every point x renamed to sigma[x]."""
    sig = tuple(sigma)
    new = [None] * len(sig)
    for x, v in enumerate(f.images, start=1):
        new[sig[x - 1] - 1] = None if v is None else sig[v - 1]
    return type(f)(new)

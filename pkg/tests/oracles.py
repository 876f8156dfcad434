"""Brute-force reference computations.

Deliberately naive: maps are plain dicts, semigroups are Python sets, and
nothing here touches the Cayley-table code paths under test.
"""

from itertools import combinations, permutations, product
from math import comb, factorial


def all_total(n):
    """All maps {1..n} -> {1..n} as dicts."""
    return [dict(zip(range(1, n + 1), imgs)) for imgs in product(range(1, n + 1), repeat=n)]


def all_partial(n):
    """All partial injections of {1..n} as dicts."""
    pts = range(1, n + 1)
    out = []
    for k in range(n + 1):
        for dom in combinations(pts, k):
            for ran in permutations(pts, k):
                out.append(dict(zip(dom, ran)))
    return out


def mul(f, g):
    """Right action: x -> g(f(x)), defined where the chain is."""
    return {x: g[v] for x, v in f.items() if v in g}


def freeze(f):
    return tuple(sorted(f.items()))


def thaw(t):
    return dict(t)


def is_order(m):
    return sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))


def semigroup(maps):
    """(elements as frozen dicts, product function on frozen dicts)."""
    elems = [freeze(f) for f in maps]
    return elems, lambda a, b: freeze(mul(thaw(a), thaw(b)))


def local_set(elems, prod, a):
    return {prod(prod(a, x), a) for x in elems}


def green_brute(elems, prod):
    """L, R, D classes (as sets of frozensets) via principal ideals."""
    def left(x):
        return frozenset({x} | {prod(s, x) for s in elems})

    def right(x):
        return frozenset({x} | {prod(x, s) for s in elems})

    def two(x):
        return frozenset({x} | {prod(prod(s, x), t) for s in elems for t in elems}
                         | left(x) | right(x))

    def classes(key):
        groups = {}
        for x in elems:
            groups.setdefault(key(x), set()).add(x)
        return {frozenset(g) for g in groups.values()}

    L, R, J = classes(left), classes(right), classes(two)
    return L, R, J


def eggbox_profile_brute(elems, prod):
    L, R, J = green_brute(elems, prod)
    out = []
    for d in J:
        rows = [r for r in R if r <= d]
        cols = [c for c in L if c <= d]
        cell = len(rows[0] & cols[0])
        idem = sum(1 for x in d if prod(x, x) == x)
        out.append((len(rows), len(cols), cell, idem))
    return tuple(sorted(out))


def has_identity(elems, prod):
    return any(all(prod(e, x) == x == prod(x, e) for x in elems) for e in elems)


def monogenic(elems, prod, a):
    seq = [a]
    while True:
        nxt = prod(seq[-1], a)
        if nxt in seq:
            return seq
        seq.append(nxt)

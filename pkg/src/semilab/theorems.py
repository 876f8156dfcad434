"""Exhaustive checks of the local-subsemigroup and variant results.

Every routine loops over instances and calls a single-instance check from
:data:`CHECKS`.  A failure record carries the check name and its JSON-ready
arguments, so :func:`replay` can re-run it in isolation.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from . import elements as el
from .elements import PartialPermutation, Transformation, parse_one_line, to_one_line
from .green import mutual_inverse_pairs
from .iso import find_isomorphism, invert_map, compose_maps, verify_morphism
from .semigroup import (
    FiniteSemigroup,
    from_maps,
    full_transformation_monoid,
    local_of_partial,
    local_subsemigroup,
    predicted_local_order,
    relabel_indices,
    restrict_to_subset,
    sandwich_restriction,
    symmetric_inverse_monoid,
    units,
    variant,
)


@dataclass
class VerificationReport:
    result_id: str
    params: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    inconclusive: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.inconclusive

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "result_id": self.result_id,
            "params": self.params,
            "verdict": "pass" if self.passed else "fail",
            "instances": self.instances,
            "inconclusive": self.inconclusive,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "summary": self.summary,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


class _Run:
    """Collects instance outcomes into a report."""

    def __init__(self, result_id: str, **params):
        self.report = VerificationReport(result_id, params)
        self._t0 = time.perf_counter()

    def record(self, check: str, args: dict, outcome: "Outcome"):
        rep = self.report
        rep.instances += 1
        if outcome.inconclusive:
            rep.inconclusive += 1
        if outcome.failure is not None:
            rep.failures.append({"check": check, "args": args, **outcome.failure})
        if outcome.witness is not None:
            rep.witnesses.append({"check": check, "args": args, **outcome.witness})

    def done(self) -> VerificationReport:
        self.report.elapsed = time.perf_counter() - self._t0
        return self.report


@dataclass
class Outcome:
    failure: Optional[dict] = None
    witness: Optional[dict] = None
    inconclusive: bool = False


# ---------------------------------------------------------------------------
# cached objects


@lru_cache(maxsize=None)
def builtin(name: str) -> FiniteSemigroup:
    """``T3``/``tn3`` for T_3, ``IS2``/``isn2`` for IS_2."""
    low = name.lower()
    for prefix, make in (("isn", symmetric_inverse_monoid), ("is", symmetric_inverse_monoid),
                         ("tn", full_transformation_monoid), ("t", full_transformation_monoid)):
        if low.startswith(prefix) and low[len(prefix):].isdigit():
            return make(int(low[len(prefix):]))
    raise ValueError(f"unknown builtin semigroup {name!r}")


@lru_cache(maxsize=None)
def _local(sname: str, a: str) -> FiniteSemigroup:
    S = builtin(sname)
    kind = "total" if S.kind == "transformation" else "partial"
    return local_subsemigroup(S, parse_one_line(a, kind=kind))


@lru_cache(maxsize=None)
def _variant(sname: str, c: str) -> FiniteSemigroup:
    S = builtin(sname)
    kind = "total" if S.kind == "transformation" else "partial"
    return variant(S, parse_one_line(c, kind=kind))


@lru_cache(maxsize=None)
def _shuffled(sname: str, seed: int) -> tuple:
    S = builtin(sname)
    perm = np.random.default_rng(seed).permutation(len(S))
    return relabel_indices(S, perm), tuple(int(p) for p in perm)


@lru_cache(maxsize=None)
def _reversed_points(sname: str) -> tuple:
    """Copy of S with every map conjugated by the point reversal x -> n+1-x."""
    S = builtin(sname)
    n = S.elements[0].degree
    rev = list(range(n, 0, -1))
    conj = [el.conjugate(e, rev) for e in S.elements]
    T = from_maps(sorted(conj), f"{S.name}(reversed)")
    return T, tuple(T.index(e) for e in conj)


def _partner(sname: str, how: str) -> tuple:
    if how == "reverse":
        return _reversed_points(sname)
    if how.startswith("shuffle:"):
        return _shuffled(sname, int(how.split(":")[1]))
    raise ValueError(f"unknown relabelling {how!r}")


def clear_caches() -> None:
    """Drop memoised semigroups so timings start cold."""
    for fn in (builtin, _local, _variant, _shuffled, _reversed_points, _T_candidates):
        fn.cache_clear()


def _p(text: str) -> PartialPermutation:
    return parse_one_line(text, kind="partial")


def _t(text: str) -> Transformation:
    return parse_one_line(text, kind="total")


def _iso_outcome(S, T, what: dict, budget: int) -> Outcome:
    res = find_isomorphism(S, T, budget)
    if res.isomorphic:
        return Outcome(witness={**what, "witness": res.witness})
    if res.verdict == "inconclusive":
        return Outcome(failure={**what, "observed": "inconclusive", "expected": "isomorphic"},
                       inconclusive=True)
    return Outcome(failure={**what, "observed": "not-isomorphic", "refutation": res.refutation,
                            "expected": "isomorphic"})


DEFAULT_BUDGET = 10_000_000

# ---------------------------------------------------------------------------
# single-instance checks (all arguments JSON-friendly)


def check_T_order(n: int, a: str) -> Outcome:
    L = _local(f"T{n}", a)
    m = _t(a).rank()
    expected = predicted_local_order("T", m)
    if len(L) != expected:
        return Outcome(failure={"observed": len(L), "expected": expected})
    return Outcome()


def check_T_fullrank(n: int, a: str) -> Outcome:
    L = _local(f"T{n}", a)
    if L.element_set() != builtin(f"T{n}").element_set():
        return Outcome(failure={"observed": len(L), "expected": "equal to T_n as a set"})
    return Outcome()


@lru_cache(maxsize=None)
def _T_candidates(r: int, q: int) -> tuple:
    return tuple(to_one_line(e) for e in builtin(f"T{r}").elements if e.rank() == q)


def check_thm1_T(n: int, a: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    alpha = _t(a)
    r, q = alpha.rank(), el.power(alpha, 2).rank()
    L = _local(f"T{n}", a)
    stuck = False
    for c in _T_candidates(r, q):
        res = find_isomorphism(L, _variant(f"T{r}", c), budget)
        if res.isomorphic:
            return Outcome(witness={"r": r, "c": c, "rank_c": q, "witness": res.witness})
        stuck |= res.verdict == "inconclusive"
    return Outcome(failure={"observed": "no sandwich element found", "r": r, "rank_a2": q,
                            "inconclusive_searches": stuck}, inconclusive=stuck)


def check_prop_stab1(n: int, a: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    m = _t(a).rank()
    return _iso_outcome(_local(f"T{n}", a), builtin(f"T{m}"), {"m": m}, budget)


def check_local_pair(sname: str, a: str, b: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    return _iso_outcome(_local(sname, a), _local(sname, b), {}, budget)


def check_IS_order(n: int, a: str) -> Outcome:
    L = _local(f"IS{n}", a)
    expected = predicted_local_order("IS", _p(a).rank())
    if len(L) != expected:
        return Outcome(failure={"observed": len(L), "expected": expected})
    return Outcome()


def check_IS_enumeration(n: int) -> Outcome:
    observed = len(builtin(f"IS{n}"))
    expected = predicted_local_order("IS", n)
    if observed != expected:
        return Outcome(failure={"observed": observed, "expected": expected})
    return Outcome()


def check_IS_fullrank(n: int, a: str) -> Outcome:
    L = _local(f"IS{n}", a)
    if L.element_set() != builtin(f"IS{n}").element_set():
        return Outcome(failure={"observed": len(L), "expected": "equal to IS_n as a set"})
    return Outcome()


def check_prop_pr1(n: int, a: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    alpha = _p(a)
    if alpha.domain() != alpha.image():
        return Outcome(failure={"observed": "dom != ran", "expected": "alpha permutes its range"})
    L = _local(f"IS{n}", a)
    A = sorted(alpha.image())
    IA = restrict_to_subset(builtin(f"IS{n}"), A)
    if len(L) != predicted_local_order("IS", len(A)):
        return Outcome(failure={"observed": len(L), "expected": predicted_local_order("IS", len(A))})
    if L.element_set() != IA.element_set():
        return Outcome(failure={"observed": "local differs from IS_A as a set", "A": A})
    return _iso_outcome(L, IA, {"A": A}, budget)


# -- the IS theorem, explicit constructions


@dataclass
class CConstruction:
    alpha: PartialPermutation
    inverse: PartialPermutation
    carrier: tuple  # dom alpha
    c: PartialPermutation
    local: FiniteSemigroup
    target: FiniteSemigroup  # variant(IS_r, c)
    chain: list  # index map local -> target


def construct_c_IS(alpha: PartialPermutation) -> CConstruction:
    """Sandwich element c in IS_r and the explicit map alpha IS_n alpha -> IS_r^c.

    With beta the inverse of alpha, x -> x·beta lands in the copy of IS_A,
    A = dom(alpha), which is then renamed onto {1..r} in increasing order.
    """
    beta = el.invert(alpha)
    carrier = tuple(sorted(alpha.domain()))
    r = len(carrier)
    c = el.relabel(el.compose(el.compose(alpha, alpha), beta), carrier)
    local = local_of_partial(alpha)
    target = variant(builtin(f"IS{r}"), c)
    chain = [target.index(el.relabel(el.compose(x, beta), carrier)) for x in local.elements]
    return CConstruction(alpha, beta, carrier, c, local, target, chain)


@dataclass
class BetaGammaConstruction:
    alpha: PartialPermutation
    sigma: tuple  # point renaming with ran(alpha') = {1..r}
    alpha_normal: PartialPermutation
    beta: PartialPermutation
    gamma: PartialPermutation
    source: FiniteSemigroup  # variant(IS_n, alpha)
    local: FiniteSemigroup  # beta IS_{2n-r} beta
    iso: list
    checks: dict


def _normalising_renaming(alpha: PartialPermutation) -> tuple:
    n = alpha.degree
    ran = sorted(alpha.image())
    rest = [x for x in range(1, n + 1) if x not in alpha.image()]
    sigma = [0] * n
    for new, old in enumerate(ran + rest, start=1):
        sigma[old - 1] = new
    return tuple(sigma)


def construct_beta_gamma(alpha: PartialPermutation) -> BetaGammaConstruction:
    """beta, gamma in IS_{2n-r} and the explicit map IS_n^alpha -> beta IS_{2n-r} beta.

    alpha is first renamed so that its range is {1..r}; beta sends the
    preimage of i to i and the points outside dom(alpha), in increasing
    order, to n+1..2n-r; gamma is the inverse of beta.  The map is
    x -> (renamed x)·beta.
    """
    n, r = alpha.degree, alpha.rank()
    z = 2 * n - r
    sigma = _normalising_renaming(alpha)
    a = el.conjugate(alpha, sigma)
    pre = {v: x for x, v in a.pairs().items()}
    pairs = {pre[i]: i for i in range(1, r + 1)}
    outside = [x for x in range(1, n + 1) if x not in a.domain()]
    pairs.update({y: j for y, j in zip(outside, range(n + 1, z + 1))})
    beta = el.partial_from_pairs(pairs, z)
    gamma = el.invert(beta)
    bb = el.compose(beta, beta)
    checks = {
        "beta gamma beta = beta": el.compose(el.compose(beta, gamma), beta) == beta,
        "gamma beta gamma = gamma": el.compose(el.compose(gamma, beta), gamma) == gamma,
        "beta gamma = 1_X": el.compose(beta, gamma) == el.partial_identity(range(1, n + 1), z),
        "beta beta gamma = alpha": el.compose(bb, gamma) == el.embed(a, z),
        "rank beta = n": beta.rank() == n,
        "rank beta^2 = r": bb.rank() == r,
    }
    source = variant(builtin(f"IS{n}"), alpha)
    local = local_of_partial(beta)
    iso = [local.index(el.compose(el.embed(el.conjugate(x, sigma), z), beta)) for x in source.elements]
    return BetaGammaConstruction(alpha, sigma, a, beta, gamma, source, local, iso, checks)


def check_thm_IS_1(n: int, a: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    alpha = _p(a)
    con = construct_c_IS(alpha)
    q = el.compose(alpha, alpha).rank()
    info = {"c": to_one_line(con.c), "rank_c": con.c.rank(), "rank_a2": q}
    if con.c.rank() != q:
        return Outcome(failure={**info, "observed": "rank(c) != rank(alpha^2)"})
    if not verify_morphism(con.local, con.target, con.chain):
        return Outcome(failure={**info, "observed": "chain map is not an isomorphism"})
    res = find_isomorphism(con.local, con.target, budget)
    if not res.isomorphic:
        return Outcome(failure={**info, "observed": f"search disagrees: {res.verdict}"},
                       inconclusive=res.verdict == "inconclusive")
    return Outcome(witness={**info, "witness": con.chain})


def check_thm_IS_2(n: int, a: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    con = construct_beta_gamma(_p(a))
    info = {"beta": to_one_line(con.beta), "gamma": to_one_line(con.gamma),
            "degree": con.beta.degree}
    bad = [k for k, ok in con.checks.items() if not ok]
    if bad:
        return Outcome(failure={**info, "observed": "failed identities", "identities": bad})
    if not verify_morphism(con.source, con.local, con.iso):
        return Outcome(failure={**info, "observed": "explicit map is not an isomorphism"})
    res = find_isomorphism(con.source, con.local, budget)
    if not res.isomorphic:
        return Outcome(failure={**info, "observed": f"search disagrees: {res.verdict}"},
                       inconclusive=res.verdict == "inconclusive")
    return Outcome(witness={**info, "witness": con.iso})


def check_thm_IS_composite(n: int, a: str) -> Outcome:
    """Chain both constructions: local(IS_n, a) -> IS_r^c -> beta IS_{2r-s} beta."""
    c1 = construct_c_IS(_p(a))
    if c1.c.degree == 0:
        return Outcome()
    c2 = construct_beta_gamma(c1.c)
    # c2.source is variant(builtin IS_r, c) with the same indexing as c1.target
    if [to_one_line(x) for x in c2.source.elements] != [to_one_line(x) for x in c1.target.elements]:
        return Outcome(failure={"observed": "index mismatch between constructions"})
    composite = compose_maps(c1.chain, c2.iso)
    if not verify_morphism(c1.local, c2.local, composite):
        return Outcome(failure={"observed": "composite map is not an isomorphism"})
    return Outcome()


# -- lemmas


def check_lemma_lm1(sname: str, a: int, b: int) -> Outcome:
    S = builtin(sname)
    t = S.table
    e, f = t[a, b], t[b, a]
    aSb = set(t[t[a], b].tolist())
    eSe = set(t[t[e], e].tolist())
    bSa = set(t[t[b], a].tolist())
    fSf = set(t[t[f], f].tolist())
    bad = []
    if aSb != eSe:
        bad.append("aSb != eSe")
    if bSa != fSf:
        bad.append("bSa != fSf")
    if bad:
        return Outcome(failure={"observed": bad})
    return Outcome()


def check_lemma_lm2(sname: str, a: int, b: int) -> Outcome:
    S = builtin(sname)
    t = S.table
    L = local_subsemigroup(S, a)
    src = list(L.provenance.parent_indices)
    bad = []
    # aSb under x*y = x(aab)y, reached by x -> xb and back by z -> za;
    # bSa under x*y = x(baa)y, reached by x -> bx and back by z -> az
    for name, carrier, p, fwd_of, back_of in (
        ("aSb", t[t[a], b], t[t[a, a], b], t[:, b], t[:, a]),
        ("bSa", t[t[b], a], t[t[b, a], a], t[b, :], t[a, :]),
    ):
        idx = list(dict.fromkeys(int(x) for x in carrier))
        M = sandwich_restriction(S, idx, int(p))
        pos = {x: i for i, x in enumerate(idx)}
        fwd = [pos[int(fwd_of[x])] for x in src]
        if not verify_morphism(L, M, fwd):
            bad.append(f"aSa -> {name} not an isomorphism")
        if [int(back_of[idx[j]]) for j in fwd] != src:
            bad.append(f"{name} back map is not the inverse")
    if bad:
        return Outcome(failure={"observed": bad})
    return Outcome()


def check_lemma_lm3(sname: str, how: str, c: int) -> Outcome:
    S = builtin(sname)
    T, phi = _partner(sname, how)
    if not verify_morphism(variant(S, c), variant(T, phi[c]), phi):
        return Outcome(failure={"observed": "map does not transport the sandwich product"})
    return Outcome()


def check_final_pair(n: int, a: str, b: str, budget: int = DEFAULT_BUDGET) -> Outcome:
    return _iso_outcome(_local(f"IS{n}", a), _local(f"IS{n}", b), {}, budget)


def check_unit_variant(sname: str, a: int, budget: int = DEFAULT_BUDGET) -> Outcome:
    S = builtin(sname)
    t = S.table
    inv = dict(units(S))[a]
    V = variant(S, a)
    k = np.arange(len(S))
    for name, m in (("x -> x a^-1", t[k, inv]), ("x -> x a", t[k, a]), ("x -> a x", t[a, k])):
        if verify_morphism(V, S, m):
            return Outcome(witness={"map": name, "witness": [int(v) for v in m]})
    return _iso_outcome(V, S, {"map": "search"}, budget)


CHECKS: dict = {
    "T_order": check_T_order,
    "T_fullrank": check_T_fullrank,
    "thm1_T": check_thm1_T,
    "prop_stab1": check_prop_stab1,
    "local_pair": check_local_pair,
    "IS_order": check_IS_order,
    "IS_enumeration": check_IS_enumeration,
    "IS_fullrank": check_IS_fullrank,
    "prop_pr1": check_prop_pr1,
    "thm_IS_1": check_thm_IS_1,
    "thm_IS_2": check_thm_IS_2,
    "thm_IS_composite": check_thm_IS_composite,
    "lemma_lm1": check_lemma_lm1,
    "lemma_lm2": check_lemma_lm2,
    "lemma_lm3": check_lemma_lm3,
    "final_pair": check_final_pair,
    "unit_variant": check_unit_variant,
}


def replay(record: dict) -> Outcome:
    """Re-run the single instance behind a failure or witness record."""
    return CHECKS[record["check"]](**record["args"])


# ---------------------------------------------------------------------------
# routines


def _labels(sname: str, pred: Callable = lambda e: True) -> list:
    return [to_one_line(e) for e in builtin(sname).elements if pred(e)]


def _require(n: int, hi: int, lo: int = 1):
    if not lo <= n <= hi:
        raise ValueError(f"n must lie in {lo}..{hi}")


def _run(result_id: str, check: str, arg_list, **params) -> VerificationReport:
    run = _Run(result_id, **params)
    for args in arg_list:
        run.record(check, args, CHECKS[check](**args))
    return run.done()


def verify_T_order(n: int) -> VerificationReport:
    _require(n, 4)
    return _run("S2.Prop.order", "T_order", [{"n": n, "a": a} for a in _labels(f"T{n}")], n=n)


def verify_T_fullrank(n: int) -> VerificationReport:
    _require(n, 4)
    perms = _labels(f"T{n}", lambda e: e.rank() == n)
    return _run("S2.Cor.fullrank", "T_fullrank", [{"n": n, "a": a} for a in perms], n=n)


def verify_thm1_T(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4)
    rep = _run("Thm.thm1", "thm1_T", [{"n": n, "a": a, "budget": budget} for a in _labels(f"T{n}")],
               n=n)
    found: dict = {}
    for w in rep.witnesses:
        found.setdefault(f"rank {w['r']}, rank(a^2) {w['rank_c']}", set()).add(w["c"])
    rep.summary = {k: sorted(v) for k, v in sorted(found.items())}
    return rep


def verify_prop_stab1(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4)
    qual = _labels(f"T{n}", lambda e: el.stabiliser_index(e) == 1)
    return _run("S2.Prop.pro2", "prop_stab1", [{"n": n, "a": a, "budget": budget} for a in qual], n=n)


def verify_prop_nonstab1(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Pairwise isomorphism of locals of equal-rank elements with stabiliser >= 2.

    The claim is treated as a hypothesis: each element is sorted into an
    isomorphism class by search against class representatives; a pair in one
    class gets the composed witness, verified directly; a pair across
    classes gets a direct search whose refutation is recorded.
    """
    _require(n, 4)
    sname = f"T{n}"
    run = _Run("S2.Prop.nonstab", n=n)
    by_rank: dict = {}
    for e in builtin(sname).elements:
        if el.stabiliser_index(e) >= 2:
            by_rank.setdefault(e.rank(), []).append(to_one_line(e))
    summary = {}
    for r, labels in sorted(by_rank.items()):
        classes: list = []  # [representative, {member: witness member -> rep}]
        for a in labels:
            for rep_a, members in classes:
                res = find_isomorphism(_local(sname, a), _local(sname, rep_a), budget)
                if res.isomorphic:
                    members[a] = res.witness
                    break
            else:
                classes.append((a, {a: list(range(len(_local(sname, a))))}))
        cls_of = {a: ci for ci, (_, mem) in enumerate(classes) for a in mem}
        for a, b in itertools.combinations(labels, 2):
            args = {"sname": sname, "a": a, "b": b}
            if cls_of[a] == cls_of[b]:
                mem = classes[cls_of[a]][1]
                w = compose_maps(mem[a], invert_map(mem[b]))
                if verify_morphism(_local(sname, a), _local(sname, b), w):
                    run.record("local_pair", args, Outcome(witness={"witness": w}))
                    continue
            args["budget"] = budget
            run.record("local_pair", args, check_local_pair(**args))
        summary[f"rank {r}"] = {
            "elements": len(labels),
            "pairs": len(labels) * (len(labels) - 1) // 2,
            "isomorphism_classes": len(classes),
            "representatives": [c[0] for c in classes],
            "stabilisers": sorted({el.stabiliser_index(_t(a)) for a in labels}),
            "rank_squares": sorted({el.power(_t(a), 2).rank() for a in labels}),
            "verdict": "all isomorphic" if len(classes) == 1 else "not all isomorphic",
        }
    rep = run.done()
    rep.summary = summary
    return rep


def verify_IS_order(n: int) -> VerificationReport:
    _require(n, 4, 0)
    run = _Run("S3.Prop.order", n=n)
    for m in range(n + 1):
        run.record("IS_enumeration", {"n": m}, check_IS_enumeration(m))
    for a in _labels(f"IS{n}"):
        run.record("IS_order", {"n": n, "a": a}, check_IS_order(n, a))
    return run.done()


def verify_IS_fullrank(n: int) -> VerificationReport:
    _require(n, 4, 0)
    full = _labels(f"IS{n}", lambda e: e.rank() == n)
    return _run("S3.Prop.fullrank", "IS_fullrank", [{"n": n, "a": a} for a in full], n=n)


def verify_prop_pr1(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4, 0)
    qual = _labels(f"IS{n}", lambda e: e.rank() < n and el.compose(e, e).rank() == e.rank())
    return _run("S3.Prop.pr1", "prop_pr1", [{"n": n, "a": a, "budget": budget} for a in qual], n=n)


def verify_thm_IS_1(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4, 1)
    return _run("Thm.thm.1", "thm_IS_1", [{"n": n, "a": a, "budget": budget} for a in _labels(f"IS{n}")],
                n=n)


def verify_thm_IS_2(n: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4, 1)
    return _run("Thm.thm.2", "thm_IS_2", [{"n": n, "a": a, "budget": budget} for a in _labels(f"IS{n}")],
                n=n)


def verify_thm_IS_composite(n: int) -> VerificationReport:
    _require(n, 3, 1)
    return _run("Thm.thm.composite", "thm_IS_composite", [{"n": n, "a": a} for a in _labels(f"IS{n}")],
                n=n)


def verify_lemma_lm1(sname: str) -> VerificationReport:
    S = builtin(sname)
    if len(S) > 40:
        raise ValueError("lemma sweep limited to order 40")
    pairs = mutual_inverse_pairs(S)
    return _run("Lemma.lm1", "lemma_lm1", [{"sname": sname, "a": a, "b": b} for a, b in pairs],
                semigroup=sname)


def verify_lemma_lm2(sname: str) -> VerificationReport:
    S = builtin(sname)
    if len(S) > 40:
        raise ValueError("lemma sweep limited to order 40")
    pairs = mutual_inverse_pairs(S)
    return _run("Lemma.lm2", "lemma_lm2", [{"sname": sname, "a": a, "b": b} for a, b in pairs],
                semigroup=sname)


def verify_lemma_lm3(sname: str, how: str = "shuffle:0") -> VerificationReport:
    S = builtin(sname)
    T, phi = _partner(sname, how)
    if not verify_morphism(S, T, phi):
        raise ValueError("relabelling is not an isomorphism")
    return _run("Lemma.lm3", "lemma_lm3", [{"sname": sname, "how": how, "c": c} for c in range(len(S))],
                semigroup=sname, partner=how)


def verify_final_prop(n: int, ranks=None, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    _require(n, 4, 0)
    run = _Run("S3.Prop.final", n=n, ranks=None if ranks is None else sorted(ranks))
    groups: dict = {}
    for e in builtin(f"IS{n}").elements:
        if ranks is None or e.rank() in ranks:
            groups.setdefault((e.rank(), el.compose(e, e).rank()), []).append(to_one_line(e))
    summary = {}
    for (r, q), labels in sorted(groups.items()):
        before = len(run.report.failures)
        for a, b in itertools.combinations_with_replacement(labels, 2):
            args = {"n": n, "a": a, "b": b, "budget": budget}
            run.record("final_pair", args, check_final_pair(**args))
        summary[f"rank {r}, rank^2 {q}"] = {
            "elements": len(labels),
            "pairs": len(labels) * (len(labels) + 1) // 2,
            "failures": len(run.report.failures) - before,
        }
    rep = run.done()
    rep.summary = summary
    return rep


def verify_unit_variant(sname: str, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    S = builtin(sname)
    if S.identity() is None:
        raise ValueError("semigroup has no identity")
    return _run("S1.unit-variant", "unit_variant",
                [{"sname": sname, "a": a, "budget": budget} for a, _ in units(S)], semigroup=sname)


# ---------------------------------------------------------------------------
# registry used by the CLI


_LM3_PARTNERS = (("T3", "shuffle:0"), ("IS2", "shuffle:0"), ("IS2", "reverse"))


def _suite(max_n: int) -> dict:
    n_t = min(max_n, 4)
    n_is = min(max_n, 4)
    small = min(max_n, 3)
    lm_semigroups = [s for s in ("T2", "T3", "IS2") if int(s[-1]) <= max_n]
    return {
        "S2.Prop.order": lambda: [verify_T_order(n_t)],
        "S2.Cor.fullrank": lambda: [verify_T_fullrank(n_t)],
        "Thm.thm1": lambda: [verify_thm1_T(n_t)],
        "S2.Prop.pro2": lambda: [verify_prop_stab1(n_t)],
        "S2.Prop.nonstab": lambda: [verify_prop_nonstab1(n_t)],
        "S3.Prop.order": lambda: [verify_IS_order(n_is)],
        "S3.Prop.fullrank": lambda: [verify_IS_fullrank(n_is)],
        "S3.Prop.pr1": lambda: [verify_prop_pr1(n_is)],
        "Thm.thm.1": lambda: [verify_thm_IS_1(n_is)],
        "Thm.thm.2": lambda: [verify_thm_IS_2(n_is)],
        "Thm.thm.composite": lambda: [verify_thm_IS_composite(small)],
        "Lemma.lm1": lambda: [verify_lemma_lm1(s) for s in lm_semigroups],
        "Lemma.lm2": lambda: [verify_lemma_lm2(s) for s in ("T3", "IS2") if int(s[-1]) <= max_n],
        "Lemma.lm3": lambda: [verify_lemma_lm3(s, h) for s, h in _LM3_PARTNERS if int(s[-1]) <= max_n],
        "S3.Prop.final": lambda: ([verify_final_prop(small)]
                                  + ([verify_final_prop(4, ranks={2})] if max_n >= 4 else [])),
        "S1.unit-variant": lambda: [verify_unit_variant(f"T{small}"), verify_unit_variant(f"IS{small}")],
    }


RESULT_IDS = tuple(_suite(3))


def run_result(result_id: str, max_n: int = 3) -> list:
    suite = _suite(max_n)
    if result_id == "all":
        return [rep for fn in suite.values() for rep in fn()]
    if result_id not in suite:
        raise KeyError(result_id)
    return suite[result_id]()

"""Acceptance criteria, one test each, run at their stated time limits.

Each test prints a single PASS/FAIL line; the lines are collected again in
the terminal summary.
"""

import contextlib
import json
import random
import time

import numpy as np
import pytest

from semilab import elements as el
from semilab.documents import from_document, to_document
from semilab.elements import parse_one_line
from semilab.green import eggbox_profile
from semilab.iso import find_isomorphism, verify_morphism
from semilab.render import to_ascii, to_dot
from semilab.semigroup import (
    full_transformation_monoid,
    local_subsemigroup,
    shuffle,
    symmetric_inverse_monoid,
    variant,
)
from semilab.theorems import (
    builtin,
    clear_caches,
    construct_beta_gamma,
    replay,
    verify_final_prop,
    verify_IS_fullrank,
    verify_IS_order,
    verify_lemma_lm1,
    verify_lemma_lm2,
    verify_lemma_lm3,
    verify_prop_nonstab1,
    verify_prop_stab1,
    verify_T_fullrank,
    verify_T_order,
    verify_thm1_T,
    verify_thm_IS_1,
    verify_thm_IS_2,
    verify_unit_variant,
)

from oracles import all_total, eggbox_profile_brute, is_order, all_partial, semigroup


def T(s):
    return parse_one_line(s, kind="total")


@pytest.fixture
def timed(criterion):
    @contextlib.contextmanager
    def run(number, title, limit):
        clear_caches()
        info = {}
        t0 = time.perf_counter()
        try:
            yield info
        except Exception as exc:
            criterion(number, title, False, f"{type(exc).__name__}: {exc}"[:200])
            raise
        elapsed = time.perf_counter() - t0
        ok = elapsed < limit
        detail = ", ".join(f"{k}={v}" for k, v in info.items())
        criterion(number, title, ok, f"{detail}{', ' if detail else ''}{elapsed:.2f}s < {limit}s")
        assert ok, f"took {elapsed:.1f}s, limit {limit}s"
    return run


def _clean(rep):
    assert rep.instances > 0
    assert not rep.failures, rep.failures[:3]
    assert rep.inconclusive == 0


def test_c01_T_order_formula(timed):
    with timed(1, "|aT_4a| = rank(a)^rank(a) for all a in T_4", 10) as info:
        rep = verify_T_order(4)
        _clean(rep)
        assert rep.instances == 256
        info["instances"] = rep.instances


def test_c02_T_full_rank(timed):
    with timed(2, "local of every permutation of T_4 equals T_4", 10) as info:
        rep = verify_T_fullrank(4)
        _clean(rep)
        assert rep.instances == 24
        info["instances"] = rep.instances


def test_c03_IS_order_formula(timed):
    with timed(3, "|aIS_4a| matches the binomial sum; |IS_m| by brute force", 10) as info:
        rep = verify_IS_order(4)
        _clean(rep)
        assert rep.instances == 209 + 5
        for m, expected in ((2, 7), (3, 34), (4, 209)):
            assert len(all_partial(m)) == expected == len(symmetric_inverse_monoid(m)) == is_order(m)
        rep = verify_IS_fullrank(4)
        _clean(rep)
        info["instances"] = 214


def test_c04_stabiliser_one(timed):
    with timed(4, "stabiliser-1 rank-m elements of T_4 have local isomorphic to T_m", 60) as info:
        rep = verify_prop_stab1(4)
        _clean(rep)
        for w in rep.witnesses:
            L = local_subsemigroup(builtin("T4"), T(w["args"]["a"]))
            assert verify_morphism(L, builtin(f"T{w['m']}"), w["witness"])
        assert len(rep.witnesses) == rep.instances
        info["instances"] = rep.instances


def test_c05_local_2432_profile(timed):
    with timed(5, "egg-box profile of the local of 2432 equals that of T_3 (oracle-checked)", 5) as info:
        L = local_subsemigroup(full_transformation_monoid(4), T("2432"))
        T3 = full_transformation_monoid(3)
        oracle = eggbox_profile_brute(*semigroup(all_total(3)))
        assert eggbox_profile(L) == eggbox_profile(T3) == oracle
        info["profile"] = oracle


def test_c06_locals_2343_1123(timed):
    with timed(6, "locals of 2343 and 1123 in T_4 are isomorphic with equal profiles", 30) as info:
        T4 = full_transformation_monoid(4)
        A = local_subsemigroup(T4, T("2343"))
        B = local_subsemigroup(T4, T("1123"))
        res = find_isomorphism(A, B)
        assert res.isomorphic and verify_morphism(A, B, res.witness)
        assert eggbox_profile(A) == eggbox_profile(B)
        info["order"] = len(A)


def test_c07_theorem_T(timed):
    with timed(7, "every a in T_4: local is a variant of T_r by c with rank(c) = rank(a^2)", 600) as info:
        rep = verify_thm1_T(4)
        _clean(rep)
        assert rep.instances == 256
        for w in rep.witnesses:
            a = T(w["args"]["a"])
            c = T(w["c"])
            assert c.rank() == el.power(a, 2).rank() and c.degree == a.rank()
            L = local_subsemigroup(builtin("T4"), a)
            V = variant(builtin(f"T{c.degree}"), c)
            assert verify_morphism(L, V, w["witness"])
        info["instances"] = rep.instances


def test_c08_theorem_IS_part1(timed):
    with timed(8, "every a in IS_3: explicit chain map onto a variant of IS_r", 60) as info:
        rep = verify_thm_IS_1(3)
        _clean(rep)
        assert rep.instances == 34
        info["instances"] = rep.instances


def test_c09_theorem_IS_part2(timed):
    with timed(9, "every a in IS_2: variant isomorphic to a local of IS_{4-r}", 60) as info:
        rep = verify_thm_IS_2(2)
        _clean(rep)
        assert rep.instances == 7
        for alpha in symmetric_inverse_monoid(2).elements:
            con = construct_beta_gamma(alpha)
            r = alpha.rank()
            assert con.beta.degree == 4 - r
            assert con.beta.rank() == 2 and el.compose(con.beta, con.beta).rank() == r
        con = construct_beta_gamma(el.partial_from_pairs({2: 1}, 2))
        assert con.beta == el.partial_from_pairs({2: 1, 1: 3}, 3)
        assert el.compose(con.beta, con.gamma) == el.partial_identity({1, 2}, 3)
        bbg = el.compose(el.compose(con.beta, con.beta), con.gamma)
        assert bbg == el.embed(con.alpha, 3)
        info["instances"] = rep.instances


def test_c10_lemmas(timed):
    with timed(10, "lemmas on mutually inverse pairs and transport under relabelling", 120) as info:
        total = 0
        for s in ("T2", "T3", "IS2"):
            rep = verify_lemma_lm1(s)
            _clean(rep)
            total += rep.instances
        for s in ("T3", "IS2"):
            rep = verify_lemma_lm2(s)
            _clean(rep)
            total += rep.instances
        for s in ("T3", "IS2"):
            rep = verify_lemma_lm3(s, "shuffle:0")
            _clean(rep)
            assert rep.instances == len(builtin(s))
            total += rep.instances
        info["instances"] = total


def test_c11_final_criterion(timed):
    with timed(11, "equal rank and rank-square gives isomorphic locals (IS_3, IS_4 rank 2)", 600) as info:
        rep3 = verify_final_prop(3)
        _clean(rep3)
        rep4 = verify_final_prop(4, ranks={2})
        _clean(rep4)
        info["instances"] = rep3.instances + rep4.instances


def test_c12_unit_variant(timed):
    with timed(12, "variant by a unit is isomorphic to the monoid (T_3, IS_3)", 30) as info:
        n = 0
        for s in ("T3", "IS3"):
            rep = verify_unit_variant(s)
            _clean(rep)
            n += rep.instances
        assert n == 12
        info["instances"] = n


def test_c13_infrastructure(timed):
    with timed(13, "JSON round trip, deterministic rendering, shuffle self-test", 30) as info:
        T4 = full_transformation_monoid(4)
        built = [full_transformation_monoid(n) for n in (1, 2, 3)] + [T4]
        built += [symmetric_inverse_monoid(n) for n in range(5)]
        built += [local_subsemigroup(T4, T(a)) for a in ("2432", "2343", "1123")]
        built += [variant(full_transformation_monoid(3), a) for a in range(27)]
        built += [variant(symmetric_inverse_monoid(2), a) for a in range(7)]
        for S in built:
            doc = json.loads(json.dumps(to_document(S)))
            back = from_document(doc)
            assert to_document(back) == doc
            assert np.array_equal(back.table, S.table)
        for S in built[:12]:
            assert to_ascii(S) == to_ascii(from_document(to_document(S)))
            assert to_dot(S) == to_dot(from_document(to_document(S)))
        rng = np.random.default_rng(2024)
        for S in (symmetric_inverse_monoid(2), full_transformation_monoid(3)):
            for _ in range(10):
                Sh, _ = shuffle(S, rng)
                res = find_isomorphism(S, Sh)
                assert res.isomorphic and verify_morphism(S, Sh, res.witness)
        info["round_trips"] = len(built)


def test_c14_nonstab_report(timed):
    with timed(14, "non-unit-stabiliser pairs in T_4: definitive, replayable report", 600) as info:
        rep = verify_prop_nonstab1(4)
        assert rep.inconclusive == 0
        assert rep.instances == len(rep.witnesses) + len(rep.failures)
        pairs = sum(v["pairs"] for v in rep.summary.values())
        assert rep.instances == pairs
        sample = random.Random(0).sample(rep.witnesses, min(20, len(rep.witnesses))) + rep.failures[:20]
        for record in sample:
            out = replay(json.loads(json.dumps(record)))
            assert (out.witness is not None) == (record in rep.witnesses)
        verdicts = {k: v["verdict"] for k, v in rep.summary.items()}
        info["verdicts"] = json.dumps(verdicts)

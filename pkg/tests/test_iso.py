import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semilab.elements import parse_one_line
from semilab.iso import (
    compose_maps,
    find_isomorphism,
    fingerprint,
    greedy_generators,
    index_period,
    invert_map,
    verify_morphism,
)
from semilab.semigroup import (
    from_table,
    full_transformation_monoid,
    index_closure,
    local_subsemigroup,
    relabel_indices,
    shuffle,
    symmetric_inverse_monoid,
    variant,
)


def T(s):
    return parse_one_line(s, kind="total")


@pytest.fixture(scope="module")
def T3():
    return full_transformation_monoid(3)


@pytest.fixture(scope="module")
def T4():
    return full_transformation_monoid(4)


def test_index_period_examples(T4):
    assert index_period(T4, T4.index(T("2432"))) == (1, 2)
    assert index_period(T4, T4.index(T("2343"))) == (2, 2)
    assert index_period(T4, T4.index(T("1234"))) == (1, 1)
    assert index_period(T4, T4.index(T("2341"))) == (1, 4)


def test_fingerprint_separates(T3):
    IS2 = symmetric_inverse_monoid(2)
    assert fingerprint(T3) != fingerprint(IS2)
    T2 = full_transformation_monoid(2)
    IS1 = symmetric_inverse_monoid(1)
    assert len(T2) != len(IS1)
    res = find_isomorphism(T2, IS1)
    assert res.verdict == "not-isomorphic" and res.refutation == "order"


def test_same_order_non_isomorphic(T3):
    # T_3 and its variant by 112 both have 27 elements; only T_3 has an identity
    V = variant(T3, T("112"))
    res = find_isomorphism(T3, V)
    assert res.verdict == "not-isomorphic"
    assert res.witness is None and res.refutation


def test_order_two_semigroups():
    # the five order-2 semigroups up to isomorphism and anti-isomorphism
    tables = {
        "zero": [[0, 0], [0, 0]],
        "left-zero": [[0, 0], [1, 1]],
        "right-zero": [[0, 1], [0, 1]],
        "semilattice": [[0, 0], [0, 1]],
        "group": [[0, 1], [1, 0]],
    }
    sgs = {k: from_table(v) for k, v in tables.items()}
    for a, b in itertools.combinations(sgs, 2):
        assert not find_isomorphism(sgs[a], sgs[b]).isomorphic, (a, b)
    for k, S in sgs.items():
        assert find_isomorphism(S, relabel_indices(S, [1, 0])).isomorphic, k


def test_self_isomorphism_is_verified(T3):
    res = find_isomorphism(T3, T3)
    assert res.isomorphic
    assert verify_morphism(T3, T3, res.witness)


@pytest.mark.parametrize("make,n", [(full_transformation_monoid, 3), (symmetric_inverse_monoid, 2),
                                    (symmetric_inverse_monoid, 3)])
def test_shuffle_selftest(make, n):
    S = make(n)
    rng = np.random.default_rng(0)
    for _ in range(10):
        Sh, perm = shuffle(S, rng)
        res = find_isomorphism(S, Sh)
        assert res.isomorphic
        assert verify_morphism(S, Sh, res.witness)
        assert verify_morphism(S, Sh, list(perm))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(range(27)))
def test_variant_shuffle_property(seed, a):
    V = variant(full_transformation_monoid(3), a)
    Sh, _ = shuffle(V, np.random.default_rng(seed))
    res = find_isomorphism(V, Sh)
    assert res.isomorphic and verify_morphism(V, Sh, res.witness)


def test_transport_through_witness(T4):
    """Isomorphisms compose, and products transport through the witness."""
    A = local_subsemigroup(T4, T("2343"))
    B = local_subsemigroup(T4, T("1123"))
    res = find_isomorphism(A, B)
    assert res.isomorphic
    phi = res.witness
    for x, y in itertools.product(range(len(A)), repeat=2):
        assert phi[A.table[x, y]] == B.table[phi[x], phi[y]]
    back = invert_map(phi)
    assert verify_morphism(B, A, back)
    assert compose_maps(phi, back) == list(range(len(A)))


def test_verify_morphism_edge_cases(T3):
    ident = list(range(len(T3)))
    assert verify_morphism(T3, T3, ident)
    assert not verify_morphism(T3, T3, ident[:-1])
    assert not verify_morphism(T3, T3, [0] * len(T3))
    assert not verify_morphism(T3, T3, ident[:-1] + [len(T3)])
    swapped = ident[:]
    swapped[0], swapped[1] = swapped[1], swapped[0]
    assert not verify_morphism(T3, T3, swapped)


def test_budget_exhaustion_is_inconclusive(T3):
    Sh, _ = shuffle(T3, np.random.default_rng(1))
    res = find_isomorphism(T3, Sh, budget=0)
    assert res.verdict == "inconclusive" and res.witness is None


def test_greedy_generators_generate(T3):
    gens = greedy_generators(T3)
    assert sorted(index_closure(T3, gens)) == list(range(27))
    IS3 = symmetric_inverse_monoid(3)
    assert sorted(index_closure(IS3, greedy_generators(IS3))) == list(range(34))

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.canonical import canonical_label_connected
from src.config import StrategyConfig
from src.digraph import decompose
from src.errors import DimensionMismatchError
from src.generators import generate, random_permutation, random_tuple, tuple_with_components
from src.instances import perm_to_one_based, tuple_from_rows
from src.models import LabeledComponent
from src.oracle import brute_force_scp
from src.perms import conjugate_tuple, identity_tuple, verify_conjugacy
from src.solver import match_components, pairwise_iso, solve
from strategies import component_tuples

MODES = ("auto", "label", "pairwise")


def strategy(mode: str = "auto", workers: int = 1) -> StrategyConfig:
    return StrategyConfig.build(mode=mode, workers=workers)


def labeled(a) -> list:
    dec = decompose(a)
    return [
        LabeledComponent(cid, len(m), m[0], canonical_label_connected(t))
        for cid, (m, t) in enumerate(zip(dec.members, dec.local_tuples))
    ]


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("mode", MODES)
def test_tuple_is_conjugate_to_itself(mode):
    a = tuple_from_rows([[2, 1, 4, 3, 5], [1, 3, 2, 5, 4]])
    res = solve(a, a, strategy(mode))
    assert res.conjugate
    assert verify_conjugacy(a, a, res.witness)


def test_cycle_versus_identity_fails_on_sizes():
    res = solve(tuple_from_rows([[2, 3, 1]]), identity_tuple(3, 1))
    assert not res.conjugate
    assert res.witness is None
    assert res.stats.sizes_a == [(3, 1)]
    assert res.stats.sizes_b == [(1, 3)]


def test_random_conjugate_pair_is_found():
    rng = random.Random(10)
    a = random_tuple(rng, 10, 3)
    b = conjugate_tuple(a, random_permutation(rng, 10))
    res = solve(a, b)
    assert res.conjugate
    assert verify_conjugacy(a, b, res.witness)


def test_two_transpositions_versus_one():
    res = solve(tuple_from_rows([[2, 1, 4, 3]]), tuple_from_rows([[2, 1, 3, 4]]))
    assert not res.conjugate


def test_same_sizes_different_labels():
    # both: two components of size 2, but colour 2 differs on one of them
    a = tuple_from_rows([[2, 1, 4, 3], [2, 1, 4, 3]])
    b = tuple_from_rows([[2, 1, 4, 3], [2, 1, 3, 4]])
    for mode in MODES:
        assert not solve(a, b, strategy(mode)).conjugate


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        solve(identity_tuple(3, 1), identity_tuple(4, 1))
    with pytest.raises(DimensionMismatchError):
        solve(identity_tuple(3, 1), identity_tuple(3, 2))


def test_auto_mode_uses_threshold_per_size_class():
    # n = 16: threshold 16 / 4 = 4
    few = generate("few-large", 16, 2, seed=1, k=2)
    res = solve(few.a, few.b, strategy("auto"))
    assert res.conjugate
    assert [(c.size, c.strategy) for c in res.stats.classes] == [(8, "pairwise")]

    many = generate("equal-components", 16, 2, seed=1, s=2)
    res = solve(many.a, many.b, strategy("auto"))
    assert [(c.size, c.count, c.strategy) for c in res.stats.classes] == [(2, 8, "label")]


def test_custom_threshold_expression():
    inst = generate("equal-components", 16, 2, seed=3, s=4)
    cfg = StrategyConfig.build(mode="auto", threshold_expr="4")
    res = solve(inst.a, inst.b, cfg)
    assert [c.strategy for c in res.stats.classes] == ["pairwise"]


def test_witness_does_not_depend_on_worker_count():
    inst = generate("mixed", 40, 3, seed=5, s=4)
    serial = solve(inst.a, inst.b, strategy("label", workers=1))
    parallel = solve(inst.a, inst.b, strategy("label", workers=2))
    assert serial.conjugate and parallel.conjugate
    assert serial.witness == parallel.witness


def test_agrees_with_oracle_on_small_instances():
    rng = random.Random(7)
    for i in range(150):
        n = rng.randint(1, 6)
        d = rng.randint(1, 2)
        if i % 3 == 0:
            inst = generate("conjugate-pair", n, d, seed=rng.randrange(2**32))
        elif i % 3 == 1:
            inst = generate("random", n, d, seed=rng.randrange(2**32))
        else:
            inst = generate("mixed", n, d, seed=rng.randrange(2**32), s=2, independent=True)
        res = solve(inst.a, inst.b)
        expected = brute_force_scp(inst.a, inst.b)
        assert res.conjugate == (expected is not None)
        if res.conjugate:
            assert verify_conjugacy(inst.a, inst.b, res.witness)


@settings(max_examples=50, deadline=None)
@given(component_tuples(), st.integers(min_value=0, max_value=10**6), st.booleans())
def test_strategies_agree(a, seed, conjugate):
    rng = random.Random(seed)
    if conjugate:
        b = conjugate_tuple(a, random_permutation(rng, a.n))
    else:
        # same component sizes, independently drawn components
        sizes = [len(m) for m in decompose(a).members]
        b = conjugate_tuple(tuple_with_components(rng, sizes, a.d), random_permutation(rng, a.n))
    answers = set()
    for mode in MODES:
        res = solve(a, b, strategy(mode))
        if res.conjugate:
            assert verify_conjugacy(a, b, res.witness)
        answers.add(res.conjugate)
    assert len(answers) == 1


@settings(max_examples=50, deadline=None)
@given(component_tuples(), st.integers(min_value=0, max_value=10**6), st.booleans())
def test_symmetric_and_relabeling_invariant(a, seed, conjugate):
    rng = random.Random(seed)
    if conjugate:
        b = conjugate_tuple(a, random_permutation(rng, a.n))
    else:
        b = generate("mixed", a.n, a.d, seed=seed, s=3).a
    sigma, rho = random_permutation(rng, a.n), random_permutation(rng, a.n)
    answer = solve(a, b).conjugate
    assert solve(b, a).conjugate == answer
    assert solve(conjugate_tuple(a, sigma), conjugate_tuple(b, rho)).conjugate == answer


# ---------------------------------------------------------------------------
# pairwise_iso
# ---------------------------------------------------------------------------


def test_pairwise_identical_cycles_map_identically():
    a = tuple_from_rows([[2, 3, 1]])
    assert perm_to_one_based(pairwise_iso(a, a)) == (1, 2, 3)


def test_pairwise_propagates_from_first_candidate():
    ha, hb = tuple_from_rows([[2, 3, 1]]), tuple_from_rows([[3, 1, 2]])
    phi = pairwise_iso(ha, hb)
    assert perm_to_one_based(phi) == (1, 3, 2)
    assert verify_conjugacy(ha, hb, phi)


def test_pairwise_cycle_types_must_match():
    ha = tuple_from_rows([[2, 3, 4, 1]])
    assert pairwise_iso(ha, tuple_from_rows([[2, 1, 4, 3]])) is None
    hb = tuple_from_rows([[2, 4, 1, 3]])
    phi = pairwise_iso(ha, hb)
    assert phi is not None and verify_conjugacy(ha, hb, phi)


def test_pairwise_size_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        pairwise_iso(tuple_from_rows([[2, 1]]), tuple_from_rows([[2, 3, 1]]))


# ---------------------------------------------------------------------------
# match_components
# ---------------------------------------------------------------------------


def test_match_empty_sides():
    assert match_components([], []) == []


def test_match_equal_multisets():
    side = labeled(tuple_from_rows([[2, 1, 4, 3]]))
    other = labeled(tuple_from_rows([[3, 4, 1, 2]]))
    pairs = match_components(side, other)
    assert pairs is not None and len(pairs) == 2
    assert [(ca.first_vertex, cb.first_vertex) for ca, cb in pairs] == [(0, 0), (2, 1)]


def test_match_size_mismatch():
    side = labeled(tuple_from_rows([[2, 1]]))
    other = labeled(tuple_from_rows([[1, 2]]))
    assert match_components(side, other) is None

"""Semigroup engine tests against the independent brute-force oracles."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsemi.core import (
    AperySet,
    NumericalSemigroup,
    frobenius_oracle,
    minimal_generators,
    representation,
)
from numsemi.errors import InvariantViolation, NotCoprimeError

from oracles import naive_apery, naive_factorizations, naive_frobenius


def test_minimal_generators_examples():
    assert minimal_generators((3, 6, 10)).generators == (3, 10)
    assert minimal_generators((4, 10, 20, 35)).generators == (4, 10, 35)
    assert minimal_generators((1, 4, 10, 20)).generators == (1,)


def test_minimal_generators_order_independent():
    assert minimal_generators((10, 3, 6)).generators == (3, 10)


def test_minimal_generators_gcd_error():
    with pytest.raises(NotCoprimeError) as info:
        minimal_generators((4, 6))
    assert info.value.gcd == 2
    assert "gcd 2" in str(info.value)


def test_contains_examples():
    assert NumericalSemigroup((3, 10)).contains(13)
    assert not NumericalSemigroup((6, 10, 15)).contains(29)
    assert NumericalSemigroup((6, 10, 15)).contains(0)
    assert not NumericalSemigroup((3, 10)).contains(-4)


def test_representation_examples():
    assert representation(30, (6, 10)) == (5, 0)
    assert representation(0, (6, 10, 15)) == (0, 0, 0)
    assert representation(29, (6, 10, 15)) is None


def test_representation_rejects_negative():
    with pytest.raises(ValueError):
        representation(-1, (2, 3))


def test_apery_examples():
    assert NumericalSemigroup((3, 10)).apery(3).by_residue == (0, 10, 20)
    assert NumericalSemigroup((1,)).apery(1).by_residue == (0,)
    # cross-checked against the naive sweep
    assert NumericalSemigroup((6, 10, 15)).apery(6).by_residue == (0, 25, 20, 15, 10, 35)
    assert naive_apery((6, 10, 15), 6) == [0, 25, 20, 15, 10, 35]


def test_apery_requires_membership():
    with pytest.raises(ValueError):
        NumericalSemigroup((3, 10)).apery(7)


def test_apery_non_smallest_anchor():
    S = NumericalSemigroup((3, 10))
    assert S.apery(10).by_residue == tuple(naive_apery((3, 10), 10))


def test_frobenius_examples():
    assert frobenius_oracle((3, 10)) == 17
    assert frobenius_oracle((2, 3)) == 1
    assert frobenius_oracle((6, 10, 15)) == 29
    assert frobenius_oracle((1,)) == -1


def test_frobenius_gcd_error():
    with pytest.raises(NotCoprimeError):
        frobenius_oracle((6, 10))


def test_factorizations_examples():
    S = NumericalSemigroup((6, 10, 15))
    assert S.factorizations(30) == [(5, 0, 0), (0, 3, 0), (0, 0, 2)]
    assert S.factorizations(0) == [(0, 0, 0)]
    assert NumericalSemigroup((3, 10)).factorizations(7) == []


def test_rs_partition_examples():
    S = NumericalSemigroup((6, 10, 15))
    assert S.rs_partition(30).class_count() == 3
    assert S.rs_partition(6).class_count() == 1
    assert NumericalSemigroup((3, 10)).rs_partition(30).class_count() == 2


def test_rs_partition_requires_membership():
    with pytest.raises(ValueError):
        NumericalSemigroup((6, 10, 15)).rs_partition(29)


def _support_graph_components(vectors):
    """Reference connectivity: BFS over shared-support edges."""
    remaining = list(vectors)
    components = []
    while remaining:
        frontier = [remaining.pop(0)]
        component = set(frontier)
        while frontier:
            u = frontier.pop()
            linked = [
                v
                for v in remaining
                if any(a > 0 and b > 0 for a, b in zip(u, v))
            ]
            for v in linked:
                remaining.remove(v)
                component.add(v)
                frontier.append(v)
        components.append(component)
    return components


@pytest.mark.parametrize(
    "gens,s",
    [
        ((6, 10, 15), 30),
        ((6, 10, 15), 60),
        ((3, 10), 30),
        ((4, 6, 9), 18),
        ((5, 6, 8), 40),
    ],
)
def test_rs_partition_matches_reference_components(gens, s):
    S = NumericalSemigroup(gens)
    part = S.rs_partition(s)
    flattened = [v for cls in part.classes for v in cls]
    assert sorted(flattened) == sorted(S.factorizations(s))
    assert len(flattened) == len(set(flattened))
    reference = _support_graph_components(S.factorizations(s))
    assert sorted(sorted(c) for c in (set(cls) for cls in part.classes)) == sorted(
        sorted(c) for c in reference
    )


def test_betti_oracle_examples():
    assert NumericalSemigroup((6, 10, 15)).betti_elements() == {30}
    assert NumericalSemigroup((10, 15, 21)).betti_elements() == {30, 105}
    assert NumericalSemigroup((2, 3)).betti_elements() == {6}
    assert NumericalSemigroup((1,)).betti_elements() == set()


def test_betti_oracle_embedding_dimension_guard():
    S = NumericalSemigroup((31, 37, 41, 43, 47, 53, 59))
    assert S.embedding_dimension == 7
    with pytest.raises(ValueError):
        S.betti_elements()


def test_embedding_dimension_examples():
    assert NumericalSemigroup((1,)).embedding_dimension == 1
    assert NumericalSemigroup((10, 20, 35, 56)).embedding_dimension == 3
    assert NumericalSemigroup((20, 35, 56, 84)).embedding_dimension == 4


def _random_coprime_gens(rng: random.Random) -> tuple[int, ...]:
    while True:
        length = rng.randint(2, 4)
        gens = tuple(sorted(rng.sample(range(2, 80), length)))
        if math.gcd(*gens) == 1:
            return gens


def test_apery_and_frobenius_consistency_random():
    rng = random.Random(0xA9E127)
    for _ in range(60):
        gens = _random_coprime_gens(rng)
        S = NumericalSemigroup(gens)
        m = S.generators[0]
        ap = S.apery()
        assert len(ap) == m
        assert ap.by_residue[0] == 0
        for element in ap:
            assert S.contains(element)
            assert not S.contains(element - m)
        f = S.frobenius()
        assert not S.contains(f) or f == -1
        for x in range(f + 1, f + m + 1):
            assert S.contains(x)


def test_frobenius_matches_naive_oracle():
    rng = random.Random(0x5EED)
    for _ in range(25):
        gens = _random_coprime_gens(rng)
        assert frobenius_oracle(gens) == naive_frobenius(gens), gens


def test_apery_matches_naive_oracle():
    for gens in [(6, 10, 15), (4, 6, 9), (5, 7, 11), (3, 10)]:
        S = NumericalSemigroup(gens)
        m = S.generators[0]
        assert list(S.apery(m).by_residue) == naive_apery(gens, m)


def test_sylvester_random_pairs():
    rng = random.Random(0x515C)
    seen = 0
    while seen < 100:
        a = rng.randint(2, 199)
        b = rng.randint(a + 1, 200)
        if math.gcd(a, b) != 1:
            continue
        seen += 1
        assert frobenius_oracle((a, b)) == a * b - a - b


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=500), st.data())
def test_factorization_soundness(s, data):
    gens = data.draw(
        st.lists(st.integers(min_value=2, max_value=60), min_size=2, max_size=4, unique=True)
    )
    if math.gcd(*gens) != 1:
        gens.append(1 + max(gens))
    S = NumericalSemigroup(tuple(gens))
    facts = S.factorizations(s)
    for v in facts:
        assert sum(c * g for c, g in zip(v, S.generators)) == s
    assert set(facts) == naive_factorizations(S.generators, s)
    assert len(facts) == len(set(facts))


def test_apery_set_validation():
    with pytest.raises(InvariantViolation):
        AperySet(3, (0, 1))
    with pytest.raises(InvariantViolation):
        AperySet(3, (1, 4, 2))
    with pytest.raises(InvariantViolation):
        AperySet(3, (0, 2, 4))


def test_caches_are_idempotent():
    S = NumericalSemigroup((6, 10, 15))
    assert S.frobenius() == S.frobenius() == 29
    assert S.apery().by_residue == S.apery().by_residue


def test_huge_generators_answer_membership_but_refuse_materialization():
    S = NumericalSemigroup((10_000_000_019, 10_000_000_033))
    assert S.contains(10_000_000_019 + 10_000_000_033)
    assert not S.contains(10_000_000_020)
    with pytest.raises(ValueError, match="desk-scale"):
        S.frobenius()
    with pytest.raises(ValueError, match="desk-scale"):
        S.apery()

"""Telescopic sequences and free numerical semigroups.

Detection with explicit certificates, the c* constants and freeness
criterion, the free fast paths (Frobenius, Apery, minimal presentation,
Betti elements), and the classical gcd-reduction formulas for the
Frobenius number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from numsemi import _kernels
from numsemi.arith import checked_int64, gcd_list, validated_generators
from numsemi.core import (
    APERY_MATERIALIZE_LIMIT,
    APERY_TABLE_LIMIT,
    AperySet,
    NumericalSemigroup,
    evaluate,
)
from numsemi.errors import InvariantViolation, NotCoprimeError


@dataclass(frozen=True)
class TelescopicCertificate:
    """Witness data for a telescopic sequence.

    ``d_chain[i]`` is the gcd of the first i+1 entries.  ``witnesses[i-2]``
    represents entry i divided by d_i over the prefix entries divided by
    d_{i-1} (positions are 1-based, so the list covers i = 2..n).
    """

    sequence: tuple[int, ...]
    d_chain: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def scaled_prefix(self, i: int) -> tuple[int, ...]:
        """The generators witness i-2 is expressed over: entries 1..i-1
        each divided by d_{i-1}."""
        d_prev = self.d_chain[i - 2]
        return tuple(a // d_prev for a in self.sequence[: i - 1])

    def scaled_target(self, i: int) -> int:
        """Entry i divided by d_i."""
        return self.sequence[i - 1] // self.d_chain[i - 1]


@dataclass(frozen=True)
class NotTelescopic:
    """First position at which the telescopic condition fails."""

    sequence: tuple[int, ...]
    failing_index: int
    failing_value: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class FreeDecomposition:
    """An arrangement certified free: n_1 equals the product of the c*."""

    arrangement: tuple[int, ...]
    cstars: tuple[int, ...]
    reps: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        e = len(self.arrangement)
        if len(self.cstars) != e - 1 or len(self.reps) != e - 1:
            raise InvariantViolation("free decomposition needs one c* and one witness per i >= 2")
        if math.prod(self.cstars) != self.arrangement[0]:
            raise InvariantViolation(
                f"not free: n_1 = {self.arrangement[0]} but the c* product is {math.prod(self.cstars)}"
            )
        for i, (c, rep) in enumerate(zip(self.cstars, self.reps), start=2):
            prefix = self.arrangement[: i - 1]
            if len(rep) != len(prefix) or evaluate(rep, prefix) != c * self.arrangement[i - 1]:
                raise InvariantViolation(f"witness for position {i} does not evaluate to c*_{i} * n_{i}")


@dataclass(frozen=True)
class NotFree:
    """Failed freeness product test, with the offending c* constants."""

    arrangement: tuple[int, ...]
    cstars: tuple[int, ...]
    product: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Presentation:
    """Relation pairs of factorization vectors over ``arrangement``.

    Every pair's two sides must evaluate to the same element; that value
    set is the Betti set for the free constructions emitted here.
    """

    arrangement: tuple[int, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        for lhs, rhs in self.relations:
            left = evaluate(lhs, self.arrangement)
            right = evaluate(rhs, self.arrangement)
            if left != right:
                raise InvariantViolation(f"relation sides evaluate to {left} != {right}")

    def evaluations(self) -> tuple[int, ...]:
        return tuple(evaluate(lhs, self.arrangement) for lhs, _ in self.relations)

    def __len__(self) -> int:
        return len(self.relations)


def divide_chain(seq: Sequence[int]) -> tuple[int, ...]:
    """Prefix gcds d_i = gcd of the first i entries."""
    entries = validated_generators(seq)
    chain = []
    acc = 0
    for a in entries:
        acc = math.gcd(acc, a)
        chain.append(acc)
    return tuple(chain)


def is_telescopic(seq: Sequence[int]) -> TelescopicCertificate | NotTelescopic:
    """Check the telescopic condition, producing witnesses or the first
    failing position.

    Every entry i >= 2 must satisfy: entry_i / d_i is representable over
    the prefix entries scaled by d_{i-1}.  Repeated entries are rejected
    (their telescopic status is not meaningful here).
    """
    entries = validated_generators(seq)
    if len(entries) < 2:
        raise ValueError("telescopic analysis needs at least 2 entries")
    if len(set(entries)) != len(entries):
        raise ValueError("telescopic analysis rejects repeated entries")
    chain = divide_chain(entries)
    if chain[-1] != 1:
        raise NotCoprimeError(chain[-1])
    witnesses = []
    for i in range(2, len(entries) + 1):
        d_prev = chain[i - 2]
        scaled_prefix = tuple(a // d_prev for a in entries[: i - 1])
        target = entries[i - 1] // chain[i - 1]
        witness = _kernels.min_representation(target, scaled_prefix)
        if witness is None:
            return NotTelescopic(entries, i, target)
        witnesses.append(witness)
    return TelescopicCertificate(entries, chain, tuple(witnesses))


def _assert_minimal_arrangement(entries: tuple[int, ...]) -> None:
    if len(set(entries)) != len(entries):
        raise ValueError("arrangement is not a minimal generating set (repeated entry)")
    for idx, g in enumerate(entries):
        if len(entries) == 1:
            break
        others = entries[:idx] + entries[idx + 1 :]
        if _kernels.is_representable(g, others):
            raise ValueError(f"arrangement is not a minimal generating set ({g} is redundant)")


class _PrefixMembership:
    """Membership in the monoid generated by a fixed prefix, answered via
    the scaled prefix's Apery table when it fits."""

    def __init__(self, prefix: tuple[int, ...]) -> None:
        self.prefix = prefix
        self.d = gcd_list(prefix)
        self.scaled = tuple(p // self.d for p in prefix)
        m = min(self.scaled)
        self.modulus = m
        self.table = _kernels.apery_levels(m, self.scaled) if m <= APERY_TABLE_LIMIT else None

    def __contains__(self, value: int) -> bool:
        if value < 0:
            return False
        if value % self.d:
            return False
        w = value // self.d
        if self.table is not None:
            return w >= self.table[w % self.modulus]
        return _kernels.is_representable(w, self.scaled)

    def witness(self, value: int) -> tuple[int, ...]:
        # Coefficients over the scaled prefix reproduce value over the
        # unscaled prefix unchanged (both sides scale by d).
        rep = _kernels.min_representation(value // self.d, self.scaled)
        if rep is None:
            raise InvariantViolation(f"witness requested for non-member {value}")
        return rep


def cstar_constants(
    arrangement: Sequence[int], ceiling: int | None = None
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """For each position i >= 2, the least k >= 1 with k * n_i in the
    monoid generated by the prefix, plus the canonical witness vector.

    ``ceiling`` bounds the incremental search (default n_1, which always
    suffices because n_1 * n_i is a multiple of n_1).
    """
    entries = validated_generators(arrangement)
    d = gcd_list(entries)
    if d != 1:
        raise NotCoprimeError(d)
    _assert_minimal_arrangement(entries)
    limit = entries[0] if ceiling is None else ceiling
    cstars: list[int] = []
    reps: list[tuple[int, ...]] = []
    for i in range(2, len(entries) + 1):
        prefix = entries[: i - 1]
        member = _PrefixMembership(prefix)
        n_i = entries[i - 1]
        for k in range(1, limit + 1):
            value = checked_int64(k * n_i, "c* search value")
            if value in member:
                cstars.append(k)
                reps.append(member.witness(value))
                break
        else:
            raise ValueError(f"c* search for position {i} exceeded the ceiling {limit}")
    return tuple(cstars), tuple(reps)


def is_free(arrangement: Sequence[int], ceiling: int | None = None) -> FreeDecomposition | NotFree:
    """Freeness test for the given arrangement: n_1 must equal the product
    of the c* constants."""
    entries = validated_generators(arrangement)
    cstars, reps = cstar_constants(entries, ceiling)
    product = math.prod(cstars)
    if product != entries[0]:
        return NotFree(entries, cstars, product)
    return FreeDecomposition(entries, cstars, reps)


def free_frobenius(fd: FreeDecomposition) -> int:
    """Frobenius number of a free semigroup: the maximal Apery element
    sum((c*_i - 1) n_i) minus n_1."""
    total = sum((c - 1) * n for c, n in zip(fd.cstars, fd.arrangement[1:]))
    return checked_int64(total - fd.arrangement[0], "free Frobenius number")


def free_apery(fd: FreeDecomposition) -> AperySet:
    """Apery set of n_1: all sums over n_2..n_e with coefficient j below
    c*_j.  Exactly n_1 distinct residues must appear."""
    anchor = fd.arrangement[0]
    if anchor > APERY_MATERIALIZE_LIMIT:
        raise ValueError(f"free Apery set of size {anchor} exceeds the desk-scale limit")
    by_residue = [-1] * anchor
    combos = [0]
    for c, n in zip(fd.cstars, fd.arrangement[1:]):
        combos = [base + lam * n for base in combos for lam in range(c)]
    for element in combos:
        checked_int64(element, "free Apery element")
        r = element % anchor
        if by_residue[r] >= 0:
            raise InvariantViolation(f"duplicate Apery residue {r}: broken free decomposition")
        by_residue[r] = element
    return AperySet(anchor, tuple(by_residue))


def free_presentation(fd: FreeDecomposition) -> Presentation:
    """The e-1 relation pairs (c*_i x_i, witness over x_1..x_{i-1})."""
    e = len(fd.arrangement)
    relations = []
    for i in range(2, e + 1):
        lhs = [0] * e
        lhs[i - 1] = fd.cstars[i - 2]
        rhs = list(fd.reps[i - 2]) + [0] * (e - i + 1)
        relations.append((tuple(lhs), tuple(rhs)))
    return Presentation(fd.arrangement, tuple(relations))


def free_betti(fd: FreeDecomposition) -> set[int]:
    """Betti elements of a free semigroup: the values c*_i n_i."""
    return {
        checked_int64(c * n, "Betti element")
        for c, n in zip(fd.cstars, fd.arrangement[1:])
    }


def johnson_reduce(a1: int, a2: int, a3: int) -> int:
    """Three-generator gcd reduction: with d = gcd(a1, a2),
    F(a1, a2, a3) = d * F(a1/d, a2/d, a3) + (d - 1) * a3."""
    entries = validated_generators((a1, a2, a3))
    d_all = gcd_list(entries)
    if d_all != 1:
        raise NotCoprimeError(d_all)
    d = math.gcd(a1, a2)
    inner = NumericalSemigroup((a1 // d, a2 // d, a3)).frobenius()
    return checked_int64(d * inner + (d - 1) * a3, "Frobenius number")


def brauer_shockley_frobenius(seq: Sequence[int]) -> int:
    """Frobenius number via repeated gcd reduction.

    One step: with d the gcd of all entries but the last,
    F(a_1, ..., a_n) = d * F(a_1/d, ..., a_{n-1}/d, a_n) + (d - 1) a_n.
    Redundant generators are dropped (largest first) after each step.  The
    reversed arrangement is tried when the forward gcd is 1, which covers
    every telescopic arrangement in either direction; if neither direction
    reduces and nothing is droppable, the Apery oracle finishes the job.
    For telescopic inputs the recursion is exact in n-1 steps.
    """
    entries = validated_generators(seq)
    if len(entries) < 2:
        raise ValueError("need at least 2 generators")
    d = gcd_list(entries)
    if d != 1:
        raise NotCoprimeError(d)
    return _brauer_shockley(entries)


def _drop_redundant(entries: tuple[int, ...]) -> tuple[int, ...]:
    work = list(entries)
    changed = True
    while changed and len(work) > 1:
        changed = False
        for g in sorted(set(work), reverse=True):
            idx = work.index(g)
            others = tuple(work[:idx] + work[idx + 1 :])
            if _kernels.is_representable(g, others):
                work = list(others)
                changed = True
                break
    return tuple(work)


def _brauer_shockley(entries: tuple[int, ...]) -> int:
    work = _drop_redundant(entries)
    if len(work) == 1:
        # dropping preserves the overall gcd, so the survivor is 1
        if work[0] != 1:
            raise InvariantViolation(f"reduction left a single generator {work[0]} != 1")
        return -1
    if len(work) == 2:
        a, b = sorted(work)
        return checked_int64(a * b - a - b, "Frobenius number")
    d = gcd_list(work[:-1])
    if d > 1:
        inner = _brauer_shockley(tuple(x // d for x in work[:-1]) + (work[-1],))
        return checked_int64(d * inner + (d - 1) * work[-1], "Frobenius number")
    d = gcd_list(work[1:])
    if d > 1:
        inner = _brauer_shockley(tuple(x // d for x in work[1:]) + (work[0],))
        return checked_int64(d * inner + (d - 1) * work[0], "Frobenius number")
    return NumericalSemigroup(work).frobenius()

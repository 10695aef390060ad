"""Generic numerical-semigroup engine.

Ground truth for everything else in the package: minimal generators,
membership, Apery/Frobenius/Betti oracles, factorization enumeration and
shared-support class analysis.  All routines are exact and deterministic
(sorted generators, one canonical vector enumeration order) so outputs
are byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from numsemi import _kernels
from numsemi.arith import checked_int64, gcd_list, validated_generators
from numsemi.errors import InvariantViolation, NotCoprimeError

# Membership answers come from an Apery table over the smallest generator
# when it fits; beyond this a one-shot bounded coefficient search is used.
APERY_TABLE_LIMIT = 200_000

# Hard ceiling on materializing a full Apery set (one int per residue).
APERY_MATERIALIZE_LIMIT = 10_000_000

# The Betti scan is a desk-scale oracle, not a general algorithm.
BETTI_ORACLE_MAX_EMBEDDING_DIM = 6


def evaluate(vector: Sequence[int], gens: Sequence[int]) -> int:
    """Value of a factorization vector: sum of coefficient * generator."""
    if len(vector) != len(gens):
        raise ValueError("vector length does not match generator count")
    return sum(c * g for c, g in zip(vector, gens))


@dataclass(frozen=True)
class AperySet:
    """Least semigroup element in every residue class mod ``anchor``.

    ``by_residue[r]`` is the least element congruent to r; entry 0 is 0;
    the Frobenius number is ``max(by_residue) - anchor``.
    """

    anchor: int
    by_residue: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.anchor < 1:
            raise ValueError(f"anchor must be >= 1, got {self.anchor}")
        if len(self.by_residue) != self.anchor:
            raise InvariantViolation(
                f"Apery set must have exactly {self.anchor} elements, got {len(self.by_residue)}"
            )
        if self.by_residue[0] != 0:
            raise InvariantViolation("Apery element for residue 0 must be 0")
        for r, el in enumerate(self.by_residue):
            if el % self.anchor != r:
                raise InvariantViolation(f"Apery element {el} filed under residue {r}")

    def max_element(self) -> int:
        return max(self.by_residue)

    def frobenius(self) -> int:
        return self.max_element() - self.anchor

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.by_residue))

    def __len__(self) -> int:
        return self.anchor

    def __iter__(self) -> Iterator[int]:
        return iter(self.by_residue)


@dataclass(frozen=True)
class RsPartition:
    """Factorizations of ``value`` grouped into shared-support components.

    Two factorizations land in one class iff they are joined by a chain of
    factorizations in which consecutive vectors overlap in support.  More
    than one class marks ``value`` as a Betti element.
    """

    value: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def class_count(self) -> int:
        return len(self.classes)


class NumericalSemigroup:
    """A numerical semigroup held by its minimal generating set.

    Construction reduces any coprime generator list to the unique minimal
    system, sorted ascending.  Immutable apart from two caches populated
    at most once; racing writers recompute identical values, so concurrent
    readers are safe.
    """

    __slots__ = ("generators", "_apery_table", "_frobenius")

    def __init__(self, entries: Sequence[int]) -> None:
        seq = validated_generators(entries)
        d = gcd_list(seq)
        if d != 1:
            raise NotCoprimeError(d)
        self.generators = _minimalize(seq)
        self._apery_table: list[int] | None = None
        self._frobenius: int | None = None

    def __repr__(self) -> str:
        return f"NumericalSemigroup(⟨{', '.join(map(str, self.generators))}⟩)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def _smallest_apery(self) -> list[int]:
        if self._apery_table is None:
            m = self.generators[0]
            if m > APERY_MATERIALIZE_LIMIT:
                raise ValueError(
                    f"Apery set of size {m} exceeds the desk-scale limit "
                    f"({APERY_MATERIALIZE_LIMIT})"
                )
            self._apery_table = _kernels.apery_levels(m, self.generators)
        return self._apery_table

    def contains(self, x: int) -> bool:
        """Membership test; 0 is always in, negatives never are."""
        if x < 0:
            return False
        if x == 0:
            return True
        m = self.generators[0]
        if m == 1:
            return True
        if m <= APERY_TABLE_LIMIT:
            return x >= self._smallest_apery()[x % m]
        return _kernels.is_representable(x, self.generators)

    def apery(self, m: int | None = None) -> AperySet:
        """Apery set of ``m`` (default: the smallest generator).

        ``m`` must be a non-zero element of the semigroup.
        """
        if m is None:
            m = self.generators[0]
        if m < 1:
            raise ValueError(f"Apery anchor must be >= 1, got {m}")
        if m > APERY_MATERIALIZE_LIMIT:
            raise ValueError(
                f"Apery set of size {m} exceeds the desk-scale limit ({APERY_MATERIALIZE_LIMIT})"
            )
        if not self.contains(m):
            raise ValueError(f"{m} is not an element of {self!r}")
        if m == self.generators[0]:
            table = self._smallest_apery()
        else:
            table = _kernels.apery_levels(m, self.generators)
        return AperySet(m, tuple(table))

    def frobenius(self) -> int:
        """Largest integer outside the semigroup; -1 for the whole of N."""
        if self._frobenius is None:
            ap = self._smallest_apery()
            self._frobenius = max(ap) - self.generators[0]
        return self._frobenius

    def factorizations(self, s: int) -> list[tuple[int, ...]]:
        """All coefficient vectors over the minimal generators evaluating to s."""
        return _kernels.factorizations_of(s, self.generators)

    def rs_partition(self, s: int) -> RsPartition:
        """Shared-support components of the factorizations of ``s`` (s must be in S)."""
        facts = self.factorizations(s)
        if not facts:
            raise ValueError(f"{s} is not an element of {self!r}")
        parent = list(range(len(facts)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i: int, j: int) -> None:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        for pos in range(len(self.generators)):
            first = -1
            for idx, v in enumerate(facts):
                if v[pos] > 0:
                    if first < 0:
                        first = idx
                    else:
                        union(first, idx)
        groups: dict[int, list[tuple[int, ...]]] = {}
        for idx, v in enumerate(facts):
            groups.setdefault(find(idx), []).append(v)
        classes = tuple(tuple(groups[root]) for root in sorted(groups))
        return RsPartition(s, classes)

    def betti_elements(self, bound: int | None = None) -> set[int]:
        """Elements whose factorizations split into >= 2 support classes.

        Desk-scale scan up to ``frobenius + two largest generators`` unless
        an explicit bound is given.  The default bound is provably safe for
        free semigroups and is validated against the free closed form on
        every family instance the test suite touches.
        """
        e = self.embedding_dimension
        if e > BETTI_ORACLE_MAX_EMBEDDING_DIM:
            raise ValueError(
                f"Betti oracle supports embedding dimension <= {BETTI_ORACLE_MAX_EMBEDDING_DIM}"
            )
        if e == 1:
            return set()
        if bound is None:
            bound = self.frobenius() + self.generators[-1] + self.generators[-2]
        checked_int64(bound, "Betti scan bound")
        out: set[int] = set()
        for s in range(1, bound + 1):
            if not self.contains(s):
                continue
            facts = _kernels.factorizations_of(s, self.generators)
            if len(facts) < 2:
                continue
            if self.rs_partition(s).class_count() >= 2:
                out.add(s)
        return out


def _minimalize(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Reduce to the minimal generating set: drop entries representable
    over the smaller kept ones (ascending scan is sufficient because any
    representation of g only uses entries <= g)."""
    kept: list[int] = []
    for g in sorted(set(seq)):
        if not kept or not _kernels.is_representable(g, tuple(kept)):
            kept.append(g)
    return tuple(kept)


def minimal_generators(entries: Sequence[int]) -> NumericalSemigroup:
    """The numerical semigroup generated by ``entries`` (gcd must be 1)."""
    return NumericalSemigroup(entries)


def representation(x: int, gens: Sequence[int]) -> tuple[int, ...] | None:
    """Canonical witness vector for ``x`` over ``gens``, or None.

    Deterministic: the first vector in the canonical enumeration order
    (smallest coefficients on the latest generators).
    """
    seq = validated_generators(gens)
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return _kernels.min_representation(x, seq)


def contains(semigroup: NumericalSemigroup, x: int) -> bool:
    return semigroup.contains(x)


def apery_oracle(semigroup: NumericalSemigroup, m: int) -> AperySet:
    return semigroup.apery(m)


def frobenius_oracle(entries: Sequence[int]) -> int:
    """Brute-force Frobenius number via the Apery set of the smallest
    minimal generator: max(Ap(S, m)) - m."""
    return NumericalSemigroup(entries).frobenius()


def factorizations(semigroup: NumericalSemigroup, s: int) -> list[tuple[int, ...]]:
    return semigroup.factorizations(s)


def rs_partition(semigroup: NumericalSemigroup, s: int) -> RsPartition:
    return semigroup.rs_partition(s)


def betti_oracle(semigroup: NumericalSemigroup, bound: int | None = None) -> set[int]:
    return semigroup.betti_elements(bound)


def embedding_dimension(semigroup: NumericalSemigroup) -> int:
    return semigroup.embedding_dimension

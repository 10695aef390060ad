"""Pure-Python kernels for the hot inner loops.

Same contracts as the compiled twin in ``_speedups.pyx``; the package
selects between them at import time.  Vectors are enumerated in one
canonical order everywhere: ascending by coefficient of the last
generator, then the second-to-last, and so on (the first generator's
coefficient is forced by divisibility).  The first vector in that order
is the canonical witness returned by ``min_representation``.
"""

from __future__ import annotations

import heapq
import math
from typing import Sequence

_INT64_MAX = 2**63 - 1


def apery_levels(m: int, gens: Sequence[int]) -> list[int]:
    """Least monoid element in each residue class mod ``m``.

    Shortest-path relaxation on the residue graph: nodes 0..m-1, one arc
    r -> (r+g) mod m of weight g per generator g.  Requires every class
    to be reachable (holds whenever gcd(gens) == 1).
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m > _INT64_MAX:
        raise OverflowError("modulus too large for the 64-bit kernel domain")
    uniq = sorted(set(gens))
    if uniq and uniq[0] < 1:
        raise ValueError("generators must be positive")
    if uniq and uniq[-1] > _INT64_MAX:
        raise OverflowError("generator too large for the 64-bit kernel domain")
    arcs = [g for g in uniq if g % m != 0]
    dist: list[int] = [-1] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in arcs:
            nd = d + g
            if nd > _INT64_MAX:
                raise OverflowError(f"Apery element exceeds the 64-bit range near residue {r}")
            nr = (r + g) % m
            if dist[nr] < 0 or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    if any(d < 0 for d in dist):
        raise ValueError("unreachable residue class (generators not coprime)")
    return dist


def _prefix_gcds(gens: Sequence[int]) -> list[int]:
    pg = []
    acc = 0
    for g in gens:
        if g < 1:
            raise ValueError("generators must be positive")
        if g > _INT64_MAX:
            raise OverflowError("generator too large for the 64-bit kernel domain")
        acc = math.gcd(acc, g)
        pg.append(acc)
    return pg


def min_representation(x: int, gens: Sequence[int]) -> tuple[int, ...] | None:
    """Canonical representation of ``x`` over ``gens``, or None.

    First solution in the canonical enumeration order, i.e. the one with
    the smallest coefficients on the latest generators.
    """
    if x < 0:
        return None
    if x > _INT64_MAX:
        raise OverflowError("value too large for the 64-bit kernel domain")
    e = len(gens)
    pg = _prefix_gcds(gens)
    coeffs = [0] * e

    def rec(i: int, rem: int) -> bool:
        if rem % pg[i]:
            return False
        if i == 0:
            coeffs[0] = rem // gens[0]
            return True
        g = gens[i]
        for c in range(rem // g + 1):
            coeffs[i] = c
            if rec(i - 1, rem - c * g):
                return True
        coeffs[i] = 0
        return False

    return tuple(coeffs) if rec(e - 1, x) else None


def is_representable(x: int, gens: Sequence[int]) -> bool:
    """True iff ``x`` is a non-negative integer combination of ``gens``."""
    return min_representation(x, gens) is not None


def factorizations_of(x: int, gens: Sequence[int]) -> list[tuple[int, ...]]:
    """All representations of ``x`` over ``gens`` in canonical order."""
    if x < 0:
        return []
    if x > _INT64_MAX:
        raise OverflowError("value too large for the 64-bit kernel domain")
    e = len(gens)
    pg = _prefix_gcds(gens)
    coeffs = [0] * e
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int) -> None:
        if rem % pg[i]:
            return
        if i == 0:
            coeffs[0] = rem // gens[0]
            out.append(tuple(coeffs))
            return
        g = gens[i]
        for c in range(rem // g + 1):
            coeffs[i] = c
            rec(i - 1, rem - c * g)
        coeffs[i] = 0

    rec(e - 1, x)
    return out

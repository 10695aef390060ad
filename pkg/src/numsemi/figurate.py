"""Closed forms for consecutive triangular and tetrahedral generators.

Everything here is a formula keyed on n (often on n mod 2 or n mod 6):
pair gcds, telescopic direction, Frobenius numbers, c* constants, minimal
presentations, Betti elements and Apery sets.  Each operation checks its
own internal consistency (alternate formula variants must agree, every
fractional coefficient must divide exactly) and raises
``InvariantViolation`` on any mismatch, so a transcription bug can never
come back as a plausible-looking number.

Structural forms (c*, presentation, Betti, Apery) require the full
embedding dimension: n >= 3 for triangular triples, n >= 4 for
tetrahedral quadruples.  The Frobenius forms hold for every n >= 1.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from numsemi.arith import binomial, checked_int64, require_positive, tetrahedral, triangular
from numsemi.core import AperySet
from numsemi.errors import InvariantViolation
from numsemi.telescopic import NotTelescopic, Presentation, is_telescopic


class Direction(enum.Enum):
    """Which arrangement of a generator family is telescopic."""

    FORWARD = "forward"
    REVERSE = "reverse"


class TelescopicClass(enum.Enum):
    """Joint classification of a sequence and its reversal."""

    FORWARD = "forward"
    REVERSE = "reverse"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class CstarForm:
    """Closed-form c* constants together with the arrangement they refer to."""

    arrangement: tuple[int, ...]
    cstars: tuple[int, ...]


@dataclass(frozen=True)
class PermutationOutcome:
    permutation: tuple[int, ...]
    failing_index: int | None  # None when the permutation is telescopic

    @property
    def telescopic(self) -> bool:
        return self.failing_index is None


@dataclass(frozen=True)
class PermutationReport:
    """Result of sweeping every permutation of a generator tuple."""

    base: tuple[int, ...]
    outcomes: tuple[PermutationOutcome, ...]

    @property
    def total(self) -> int:
        return len(self.outcomes)

    @property
    def telescopic_count(self) -> int:
        return sum(1 for o in self.outcomes if o.telescopic)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantViolation(f"{what}: {num} is not divisible by {den}")
    return q


def triangular_generators(n: int) -> tuple[int, int, int]:
    """Three consecutive triangular numbers starting at index n."""
    require_positive(n, "n")
    return (triangular(n), triangular(n + 1), triangular(n + 2))


def tetrahedral_generators(n: int) -> tuple[int, int, int, int]:
    """Four consecutive tetrahedral numbers starting at index n."""
    require_positive(n, "n")
    return (tetrahedral(n), tetrahedral(n + 1), tetrahedral(n + 2), tetrahedral(n + 3))


def choose4_generators(n: int) -> tuple[int, ...]:
    """Five consecutive C(., 4) values: C(n+3, 4) .. C(n+7, 4)."""
    require_positive(n, "n")
    return tuple(binomial(n + 3 + j, 4) for j in range(5))


def arithmetic_generators(n: int, k: int) -> tuple[int, ...]:
    """The consecutive run n, n+1, ..., n+k-1."""
    require_positive(n, "n")
    require_positive(k, "k")
    return tuple(n + j for j in range(k))


def triangular_pair_gcd(n: int) -> int:
    """gcd of two consecutive triangular numbers: (n+1)/2 for odd n, n+1 for even."""
    require_positive(n, "n")
    if n % 2:
        return (n + 1) // 2
    return n + 1


def tetrahedral_pair_gcd(n: int) -> int:
    """gcd of two consecutive tetrahedral numbers, keyed on n mod 6."""
    require_positive(n, "n")
    k, r = divmod(n, 6)
    if r == 0:
        return (6 * k + 1) * (3 * k + 1)
    if r == 1:
        return (3 * k + 1) * (2 * k + 1)
    if r == 2:
        return (2 * k + 1) * (3 * k + 2)
    if r == 3:
        return (3 * k + 2) * (6 * k + 5)
    if r == 4:
        return (6 * k + 5) * (k + 1)
    return (k + 1) * (6 * k + 7)


def triangular_frobenius_case_form(n: int) -> int:
    """Parity-split cubic for the triangular Frobenius number."""
    require_positive(n, "n")
    if n % 2:
        return _exact_div(3 * n**3 + 6 * n**2 - 3 * n - 10, 4, "odd triangular Frobenius form")
    return _exact_div(3 * n**3 + 9 * n**2 + 6 * n - 4, 4, "even triangular Frobenius form")


def triangular_frobenius_floor_form(n: int) -> int:
    """Unified floor form: floor(n/2) * (sum of the three generators - 1) - 1."""
    require_positive(n, "n")
    t0, t1, t2 = triangular_generators(n)
    return (n // 2) * (t0 + t1 + t2 - 1) - 1


def frobenius_triangular(n: int) -> int:
    """Frobenius number of three consecutive triangular numbers.

    Evaluates both printed forms and insists they agree.
    """
    case = triangular_frobenius_case_form(n)
    floor = triangular_frobenius_floor_form(n)
    if case != floor:
        raise InvariantViolation(f"triangular Frobenius forms disagree at n={n}: {case} != {floor}")
    return checked_int64(case, "triangular Frobenius number")


def baker_alternating_form(n: int) -> int:
    """Single-expression (-1)^n variant of the triangular Frobenius number."""
    require_positive(n, "n")
    sign = -1 if n % 2 else 1
    num = -14 + 6 * sign + (3 + 9 * sign) * n + 3 * (5 + sign) * n**2 + 6 * n**3
    return _exact_div(num, 8, "alternating-form numerator")


def baker_parity_form(n: int) -> int:
    """Parity-split variant of the same value."""
    require_positive(n, "n")
    if n % 2:
        return _exact_div(6 * n**3 + 12 * n**2 - 6 * n - 20, 8, "odd parity form")
    return _exact_div(6 * n**3 + 18 * n**2 + 12 * n - 8, 8, "even parity form")


def baker_a(n: int) -> int:
    """Triangular Frobenius number via the conjectured cubic forms,
    cross-asserting the alternating and parity-split variants."""
    alt = baker_alternating_form(n)
    parity = baker_parity_form(n)
    if alt != parity:
        raise InvariantViolation(f"cubic form variants disagree at n={n}: {alt} != {parity}")
    return checked_int64(alt, "triangular Frobenius number")


def frobenius_tetrahedral(n: int) -> int:
    """Frobenius number of four consecutive tetrahedral numbers, keyed on
    n mod 6.  All interior divisions are exact by construction."""
    require_positive(n, "n")
    t0, t1, t2, t3 = tetrahedral_generators(n)
    r = n % 6
    if r == 0:
        value = _exact_div(n - 3, 3, "n=6k case") * t1 + n * t2 + _exact_div(n, 2, "n=6k case") * t3 - t0
    elif r == 1:
        value = (
            (n - 1) * t1
            + _exact_div(n - 1, 2, "n=6k+1 case") * t2
            + _exact_div(n - 1, 3, "n=6k+1 case") * t3
            - t0
        )
    elif r == 2:
        value = (
            (n - 1) * t1
            + _exact_div(n - 2, 3, "n=6k+2 case") * t2
            + _exact_div(n, 2, "n=6k+2 case") * t3
            - t0
        )
    elif r == 3:
        value = (
            _exact_div(n - 3, 3, "n=6k+3 case") * t1
            + _exact_div(n - 1, 2, "n=6k+3 case") * t2
            + (n + 1) * t3
            - t0
        )
    elif r == 4:
        value = (
            _exact_div(n + 2, 3, "n=6k+4 case") * t2
            + _exact_div(n + 2, 2, "n=6k+4 case") * t1
            + (n + 2) * t0
            - t3
        )
    else:
        value = (
            (n + 4) * t2
            + _exact_div(n + 1, 3, "n=6k+5 case") * t1
            + _exact_div(n + 1, 2, "n=6k+5 case") * t0
            - t3
        )
    return checked_int64(value, "tetrahedral Frobenius number")


def brauer_arithmetic_frobenius(n: int, k: int) -> int:
    """Frobenius number of the consecutive run n, ..., n+k-1:
    (floor((n-2)/(k-1)) + 1) * n - 1."""
    require_positive(n, "n")
    if k < 2:
        raise ValueError(f"need a run of at least 2 consecutive integers, got k={k}")
    if n < 2:
        raise ValueError(f"need n >= 2 (n=1 generates everything), got n={n}")
    return checked_int64(((n - 2) // (k - 1) + 1) * n - 1, "arithmetic-run Frobenius number")


def triangular_direction(n: int) -> Direction:
    """Both triangular arrangements are telescopic; forward is canonical."""
    require_positive(n, "n")
    return Direction.FORWARD


def tetrahedral_direction(n: int) -> Direction:
    """Forward for n mod 6 in {0, 1, 2, 3}, reverse for {4, 5}."""
    require_positive(n, "n")
    return Direction.FORWARD if n % 6 in (0, 1, 2, 3) else Direction.REVERSE


_REDUCED_EDIM_MSG = "reduced embedding dimension; use generic machinery"


def triangular_cstar(n: int) -> CstarForm:
    """Closed-form c* constants for the forward triangular arrangement."""
    require_positive(n, "n")
    if n < 3:
        raise ValueError(_REDUCED_EDIM_MSG)
    if n % 2:
        cstars = (n, _exact_div(n + 1, 2, "odd triangular c*"))
    else:
        cstars = (_exact_div(n, 2, "even triangular c*"), n + 1)
    return CstarForm(triangular_generators(n), cstars)


def tetrahedral_cstar(n: int) -> CstarForm:
    """Closed-form c* constants over the telescopic arrangement (forward
    for n mod 6 in {0..3}, reversed for {4, 5})."""
    require_positive(n, "n")
    if n < 4:
        raise ValueError(_REDUCED_EDIM_MSG)
    gens = tetrahedral_generators(n)
    r = n % 6
    if r == 0:
        cstars = (_exact_div(n, 3, "c*"), n + 1, _exact_div(n + 2, 2, "c*"))
    elif r == 1:
        cstars = (n, _exact_div(n + 1, 2, "c*"), _exact_div(n + 2, 3, "c*"))
    elif r == 2:
        cstars = (n, _exact_div(n + 1, 3, "c*"), _exact_div(n + 2, 2, "c*"))
    elif r == 3:
        cstars = (_exact_div(n, 3, "c*"), _exact_div(n + 1, 2, "c*"), n + 2)
    elif r == 4:
        return CstarForm(
            gens[::-1],
            (_exact_div(n + 5, 3, "c*"), _exact_div(n + 4, 2, "c*"), n + 3),
        )
    else:
        return CstarForm(
            gens[::-1],
            (n + 5, _exact_div(n + 4, 3, "c*"), _exact_div(n + 3, 2, "c*")),
        )
    return CstarForm(gens, cstars)


def triangular_presentation(n: int) -> Presentation:
    """Minimal presentation of the triangular triple semigroup, as printed
    relation pairs over the forward arrangement."""
    require_positive(n, "n")
    if n < 3:
        raise ValueError(_REDUCED_EDIM_MSG)
    gens = triangular_generators(n)
    if n % 2:
        relations = (
            ((0, n, 0), (n + 2, 0, 0)),
            ((0, 0, _exact_div(n + 1, 2, "presentation")), (0, _exact_div(n + 3, 2, "presentation"), 0)),
        )
    else:
        relations = (
            ((0, _exact_div(n, 2, "presentation"), 0), (_exact_div(n + 2, 2, "presentation"), 0, 0)),
            ((0, 0, n + 1), (0, n + 3, 0)),
        )
    return Presentation(gens, relations)


def tetrahedral_presentation(n: int) -> Presentation:
    """Minimal presentation of the tetrahedral quadruple semigroup over its
    telescopic arrangement, one relation per position i = 2..4."""
    require_positive(n, "n")
    if n < 4:
        raise ValueError(_REDUCED_EDIM_MSG)
    gens = tetrahedral_generators(n)
    r = n % 6
    div = _exact_div
    if r == 0:
        arrangement = gens
        relations = (
            ((0, div(n, 3, "pres"), 0, 0), (div(n + 3, 3, "pres"), 0, 0, 0)),
            ((0, 0, n + 1, 0), (0, n + 4, 0, 0)),
            ((0, 0, 0, div(n + 2, 2, "pres")), (0, div(n + 4, 2, "pres"), 2, 0)),
        )
    elif r == 1:
        arrangement = gens
        relations = (
            ((0, n, 0, 0), (n + 3, 0, 0, 0)),
            ((0, 0, div(n + 1, 2, "pres"), 0), (div(n + 3, 2, "pres"), 2, 0, 0)),
            ((0, 0, 0, div(n + 2, 3, "pres")), (0, 0, div(n + 5, 3, "pres"), 0)),
        )
    elif r == 2:
        arrangement = gens
        relations = (
            ((0, n, 0, 0), (n + 3, 0, 0, 0)),
            ((0, 0, div(n + 1, 3, "pres"), 0), (0, div(n + 4, 3, "pres"), 0, 0)),
            ((0, 0, 0, div(n + 2, 2, "pres")), (0, div(n + 4, 2, "pres"), 2, 0)),
        )
    elif r == 3:
        arrangement = gens
        relations = (
            ((0, div(n, 3, "pres"), 0, 0), (div(n + 3, 3, "pres"), 0, 0, 0)),
            ((0, 0, div(n + 1, 2, "pres"), 0), (div(n + 3, 2, "pres"), 2, 0, 0)),
            ((0, 0, 0, n + 2), (0, 0, n + 5, 0)),
        )
    elif r == 4:
        # reversed arrangement: positions run TH_{n+3}, TH_{n+2}, TH_{n+1}, TH_n
        arrangement = gens[::-1]
        relations = (
            ((0, div(n + 5, 3, "pres"), 0, 0), (div(n + 2, 3, "pres"), 0, 0, 0)),
            ((0, 0, div(n + 4, 2, "pres"), 0), (div(n + 2, 6, "pres"), div(n - 1, 3, "pres"), 0, 0)),
            ((0, 0, 0, n + 3), (0, 0, n, 0)),
        )
    else:
        arrangement = gens[::-1]
        relations = (
            ((0, n + 5, 0, 0), (n + 2, 0, 0, 0)),
            ((0, 0, div(n + 4, 3, "pres"), 0), (0, div(n + 1, 3, "pres"), 0, 0)),
            ((0, 0, 0, div(n + 3, 2, "pres")), (0, div(n + 1, 6, "pres"), div(n - 2, 3, "pres"), 0)),
        )
    return Presentation(arrangement, relations)


def triangular_betti(n: int) -> set[int]:
    """Betti elements of the triangular triple semigroup (values are
    multiples of tetrahedral numbers)."""
    require_positive(n, "n")
    if n < 3:
        raise ValueError(_REDUCED_EDIM_MSG)
    big, small = binomial(n + 3, 3), binomial(n + 2, 3)
    if n % 2:
        values = (_exact_div(3 * big, 2, "Betti"), 3 * small)
    else:
        values = (3 * big, _exact_div(3 * small, 2, "Betti"))
    return {checked_int64(v, "Betti element") for v in values}


def tetrahedral_betti(n: int) -> set[int]:
    """Betti elements of the tetrahedral quadruple semigroup, keyed on
    n mod 6 (values are multiples of C(., 4) numbers)."""
    require_positive(n, "n")
    if n < 4:
        raise ValueError(_REDUCED_EDIM_MSG)
    b5, b4, b3 = binomial(n + 5, 4), binomial(n + 4, 4), binomial(n + 3, 4)

    def four_thirds(x: int) -> int:
        return _exact_div(4 * x, 3, "Betti")

    r = n % 6
    if r == 0:
        values = (2 * b5, 4 * b4, four_thirds(b3))
    elif r == 1:
        values = (four_thirds(b5), 2 * b4, 4 * b3)
    elif r == 2:
        values = (2 * b5, four_thirds(b4), 4 * b3)
    elif r == 3:
        values = (4 * b5, 2 * b4, four_thirds(b3))
    elif r == 4:
        values = (four_thirds(b5), 2 * b4, 4 * b3)
    else:
        values = (4 * b5, four_thirds(b4), 2 * b3)
    return {checked_int64(v, "Betti element") for v in values}


def _coefficient_ranges_match_cstars(bounds: tuple[int, ...], cstars_reversed_to_bounds: tuple[int, ...]) -> None:
    # The printed coefficient ranges must be exactly c*_j - 1.
    for bound, cstar in zip(bounds, cstars_reversed_to_bounds):
        if bound != cstar - 1:
            raise InvariantViolation(f"Apery coefficient bound {bound} != c* - 1 = {cstar - 1}")


def triangular_apery_elements(n: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Closed-form Apery data in parameter order.

    Returns (anchor, coefficient bounds (a_max, b_max), elements listed as
    a*T_{n+1} + b*T_{n+2} with a outermost).
    """
    require_positive(n, "n")
    if n < 3:
        raise ValueError(_REDUCED_EDIM_MSG)
    t0, t1, t2 = triangular_generators(n)
    if n % 2:
        a_max, b_max = n - 1, _exact_div(n - 1, 2, "Apery range")
    else:
        a_max, b_max = _exact_div(n - 2, 2, "Apery range"), n
    _coefficient_ranges_match_cstars((a_max, b_max), triangular_cstar(n).cstars)
    elements = tuple(
        a * t1 + b * t2 for a in range(a_max + 1) for b in range(b_max + 1)
    )
    return t0, (a_max, b_max), elements


def triangular_apery(n: int) -> AperySet:
    """Closed-form Apery set of T_n, re-indexed by residue."""
    anchor, _, elements = triangular_apery_elements(n)
    return _reindex_apery(anchor, elements)


def tetrahedral_apery_elements(n: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Closed-form Apery data in parameter order.

    The anchor is TH_n for n mod 6 in {0..3} and TH_{n+3} for {4, 5}; the
    three coefficients run over the remaining generators in ascending
    index order, outermost first.
    """
    require_positive(n, "n")
    if n < 4:
        raise ValueError(_REDUCED_EDIM_MSG)
    t0, t1, t2, t3 = tetrahedral_generators(n)
    r = n % 6
    div = _exact_div
    if r == 0:
        anchor, coeff_gens = t0, (t1, t2, t3)
        bounds = (div(n - 3, 3, "Apery range"), n, div(n, 2, "Apery range"))
    elif r == 1:
        anchor, coeff_gens = t0, (t1, t2, t3)
        bounds = (n - 1, div(n - 1, 2, "Apery range"), div(n - 1, 3, "Apery range"))
    elif r == 2:
        anchor, coeff_gens = t0, (t1, t2, t3)
        bounds = (n - 1, div(n - 2, 3, "Apery range"), div(n, 2, "Apery range"))
    elif r == 3:
        anchor, coeff_gens = t0, (t1, t2, t3)
        bounds = (div(n - 3, 3, "Apery range"), div(n - 1, 2, "Apery range"), n + 1)
    elif r == 4:
        anchor, coeff_gens = t3, (t0, t1, t2)
        bounds = (n + 2, div(n + 2, 2, "Apery range"), div(n + 2, 3, "Apery range"))
    else:
        anchor, coeff_gens = t3, (t0, t1, t2)
        bounds = (div(n + 1, 2, "Apery range"), div(n + 1, 3, "Apery range"), n + 4)
    cstars = tetrahedral_cstar(n).cstars
    if r in (0, 1, 2, 3):
        _coefficient_ranges_match_cstars(bounds, cstars)
    else:
        # reversed arrangement: c*_2 governs the latest ascending generator
        _coefficient_ranges_match_cstars(bounds, cstars[::-1])
    elements = tuple(
        a * coeff_gens[0] + b * coeff_gens[1] + c * coeff_gens[2]
        for a in range(bounds[0] + 1)
        for b in range(bounds[1] + 1)
        for c in range(bounds[2] + 1)
    )
    return anchor, bounds, elements


def tetrahedral_apery(n: int) -> AperySet:
    """Closed-form Apery set over the family anchor, re-indexed by residue."""
    anchor, _, elements = tetrahedral_apery_elements(n)
    return _reindex_apery(anchor, elements)


def _reindex_apery(anchor: int, elements: tuple[int, ...]) -> AperySet:
    by_residue = [-1] * anchor
    for el in elements:
        checked_int64(el, "Apery element")
        res = el % anchor
        if by_residue[res] >= 0:
            raise InvariantViolation(f"duplicate Apery residue {res}")
        by_residue[res] = el
    return AperySet(anchor, tuple(by_residue))


def choose4_family(n: int) -> tuple[tuple[int, ...], TelescopicClass]:
    """Five consecutive C(., 4) generators plus their joint classification,
    computed by the generic telescopic checker in both directions."""
    gens = choose4_generators(n)
    forward = bool(is_telescopic(gens))
    reverse = bool(is_telescopic(gens[::-1]))
    if forward and reverse:
        cls = TelescopicClass.BOTH
    elif forward:
        cls = TelescopicClass.FORWARD
    elif reverse:
        cls = TelescopicClass.REVERSE
    else:
        cls = TelescopicClass.NEITHER
    return gens, cls


CHOOSE5_BASE = (792, 1287, 2002, 3003, 4368, 6188)


def choose5_counterexample() -> PermutationReport:
    """Sweep all 720 permutations of six consecutive C(., 5) values; none
    is telescopic."""
    outcomes = []
    for perm in itertools.permutations(CHOOSE5_BASE):
        verdict = is_telescopic(perm)
        if verdict:
            outcomes.append(PermutationOutcome(perm, None))
        else:
            assert isinstance(verdict, NotTelescopic)
            outcomes.append(PermutationOutcome(perm, verdict.failing_index))
    return PermutationReport(CHOOSE5_BASE, tuple(outcomes))


def figurate_embedding_dimension(family: str, n: int) -> int:
    """Embedding dimension of the family semigroup at index n."""
    require_positive(n, "n")
    if family == "triangular":
        return 1 if n == 1 else 2 if n == 2 else 3
    if family == "tetrahedral":
        return 1 if n == 1 else 3 if n in (2, 3) else 4
    raise ValueError(f"unknown family {family!r}")

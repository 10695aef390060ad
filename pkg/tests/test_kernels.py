"""Backend parity: the compiled kernels must be indistinguishable from the
pure-Python fallback."""

from __future__ import annotations

import math
import os
import random
import subprocess
import sys

import pytest

from numsemi._kernels import BACKEND, available_backends

BACKENDS = available_backends()

needs_both = pytest.mark.skipif(
    len(BACKENDS) < 2, reason="compiled kernels unavailable; nothing to compare"
)


def test_backend_constant():
    assert BACKEND in ("cython", "python")


def test_env_var_forces_pure_backend():
    out = subprocess.check_output(
        [sys.executable, "-c", "import numsemi; print(numsemi.BACKEND)"],
        env={**os.environ, "NUMSEMI_PURE_PYTHON": "1"},
    )
    assert out.strip() == b"python"


def _random_cases(seed: int, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        length = rng.randint(1, 5)
        gens = tuple(sorted(rng.sample(range(2, 400), length)))
        x = rng.randint(0, 2000)
        yield gens, x


@needs_both
def test_min_representation_parity():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for gens, x in _random_cases(101, 300):
        assert py.min_representation(x, gens) == cy.min_representation(x, gens), (x, gens)


@needs_both
def test_is_representable_parity():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for gens, x in _random_cases(202, 300):
        assert py.is_representable(x, gens) == cy.is_representable(x, gens), (x, gens)


@needs_both
def test_factorizations_parity_and_order():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for gens, x in _random_cases(303, 150):
        assert py.factorizations_of(x, gens) == cy.factorizations_of(x, gens), (x, gens)


@needs_both
def test_apery_parity():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    rng = random.Random(404)
    cases = 0
    while cases < 60:
        length = rng.randint(2, 5)
        gens = tuple(sorted(rng.sample(range(2, 500), length)))
        if math.gcd(*gens) != 1:
            continue
        cases += 1
        m = gens[0]
        assert py.apery_levels(m, gens) == cy.apery_levels(m, gens), gens


def test_canonical_enumeration_order():
    for impl in BACKENDS.values():
        assert impl.factorizations_of(30, (6, 10, 15)) == [(5, 0, 0), (0, 3, 0), (0, 0, 2)]
        assert impl.min_representation(30, (6, 10)) == (5, 0)


def test_apery_rejects_unreachable_residues():
    for impl in BACKENDS.values():
        with pytest.raises(ValueError):
            impl.apery_levels(4, (6, 10))


def test_apery_overflow_guard():
    big = 2**62
    for impl in BACKENDS.values():
        with pytest.raises(OverflowError):
            impl.apery_levels(5, (big, big + 1))


def test_kernel_input_domain():
    for impl in BACKENDS.values():
        with pytest.raises(ValueError):
            impl.min_representation(5, (3, -2))
        with pytest.raises(ValueError):
            impl.apery_levels(5, (0, 3))
        with pytest.raises(OverflowError):
            impl.min_representation(10, (2**64, 3))
        with pytest.raises(OverflowError):
            impl.factorizations_of(2**70, (2, 3))

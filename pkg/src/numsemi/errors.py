"""Exception types shared across the package."""

from __future__ import annotations


class NotCoprimeError(ValueError):
    """Raised when a generator list has gcd > 1 and therefore does not
    generate a numerical semigroup (Frobenius number undefined)."""

    def __init__(self, gcd: int, message: str | None = None) -> None:
        self.gcd = gcd
        super().__init__(message or f"not a numerical semigroup (gcd {gcd} > 1)")


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.

    Signals a broken closed form or decomposition (e.g. two formula
    variants disagreeing, an inexact division that should be exact, or a
    duplicated Apery residue), never a bad user input.
    """

"""Exception hierarchy shared by every module.

Exit-code contract of the CLI: InputError -> 1, InvariantViolation -> 2.
"""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input (bad type string, non-reduced word,
    nonpositive coefficients, rank mismatches, violated preconditions)."""


class ChainRegionError(InputError):
    """The truncated chain region handed to the exact minimizer is malformed:
    some upper-bound function is negative on it."""


class InvariantViolation(RuntimeError):
    """A theorem-backed internal cross-check failed.  This is never a user
    error; it means the implementation is wrong."""


class CapExceeded(RuntimeError):
    """Lattice-point enumeration hit the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded cap of {cap} points")
        self.cap = cap
        self.partial_count = cap

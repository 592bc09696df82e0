"""Exact rational <-> string conversion used by every serializer.

Rationals render as "p/q" in lowest terms with q > 0, integers as "p".
Rendering is a pure view; no renderer ever recomputes a value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def q_str(x: Fraction | int) -> str:
    """Render an exact rational; Fraction already normalizes sign and gcd."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_q(text: str | int) -> Fraction:
    """Parse "p/q" or "p" (also accepts plain ints from JSON).

    Floats are rejected: a JSON 1.1 is not the rational 11/10, and this
    package never rounds.
    """
    if isinstance(text, float):
        raise InputError(
            f"refusing float {text!r}; write rationals as strings like \"11/10\"")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc

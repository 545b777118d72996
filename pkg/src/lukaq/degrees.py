"""Truth degrees: exact rationals in [0,1] with decimal rendering at the edges.

Degrees stay `fractions.Fraction` throughout the library so that every
invariant can be checked with exact equality. Rounding to the familiar
three-decimal display (and parsing user-facing numerals back) happens only
here, at output/input boundaries.
"""

from __future__ import annotations

from fractions import Fraction

Degree = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def is_degree(value: Fraction) -> bool:
    return ZERO <= value <= ONE


def check_degree(value: Fraction, what: str = "degree") -> Fraction:
    if not is_degree(value):
        raise ValueError(f"{what} must lie in [0,1], got {value}")
    return value


def format_degree(value: Fraction) -> str:
    """Render with exactly three fractional digits, rounding half up."""
    check_degree(value)
    # floor(value*1000 + 1/2) in integer arithmetic
    n, d = (value * 1000).numerator, (value * 1000).denominator
    scaled = (2 * n + d) // (2 * d)
    return f"{scaled // 1000}.{scaled % 1000:03d}"


def format_exact(value: Fraction) -> str:
    """Exact "p/q" rendering ("p" when the value is an integer)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def has_finite_decimal(value: Fraction) -> bool:
    """True when the reduced denominator is of the form 2^a * 5^b."""
    d = value.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_numeral(value: Fraction) -> str:
    """Minimal-digit decimal when one exists, otherwise "p/q"."""
    if value < 0:
        return "-" + format_numeral(-value)
    if value.denominator == 1:
        return str(value.numerator)
    if not has_finite_decimal(value):
        return format_exact(value)
    digits = 0
    scaled = value
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    text = f"{scaled.numerator:0{digits + 1}d}"
    return f"{text[:-digits] or '0'}.{text[-digits:]}"


def parse_rational(text: str) -> Fraction:
    """Parse a decimal or "p/q" numeral into an exact rational."""
    return Fraction(text.strip())

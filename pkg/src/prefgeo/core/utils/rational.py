"""Exact rational helpers shared by every module.

Coordinates travel through files and the command line as integers or
"p/q" strings and are held in memory as fractions.Fraction.
"""
from fractions import Fraction
from numbers import Rational

Number = int | Fraction


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or string ("7", "-3/4", "5.5") to a Fraction.

    Raises:
        ValueError: If the value is a float, a bool or an unparseable string.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational coordinate: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational coordinate: {value!r}") from e
    raise ValueError(f"Not a rational coordinate: {value!r} (floats are not exact)")


def format_rational(value: Fraction) -> int | str:
    """Encode a Fraction as an int when integral, else as "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def sign(value: Number) -> int:
    """Return -1, 0 or 1."""
    return (value > 0) - (value < 0)


def min_positive_gap(values) -> Fraction | None:
    """Smallest positive difference between distinct sorted values, or None."""
    ordered = sorted(set(values))
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    return min(gaps) if gaps else None

"""Exact planar and d-dimensional points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from prefgeo.core.utils.rational import format_rational, to_rational


@dataclass(frozen=True, order=True)
class Point2:
    """A point (or direction vector) of the plane with Fraction coordinates.

    Coordinates given as ints or "p/q" strings are converted on construction.
    Ordering is lexicographic on (x, y), which gives deterministic sorts.

    Examples:
        >>> Point2(3, "1/2") - Point2(1, 0)
        Point2(x=Fraction(2, 1), y=Fraction(1, 2))
    """
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    @classmethod
    def of(cls, value: "Point2 | Iterable") -> "Point2":
        if isinstance(value, Point2):
            return value
        x, y = value
        return cls(x, y)

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def scale(self, k) -> Point2:
        return Point2(self.x * k, self.y * k)

    def dot(self, other: Point2) -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm_inf(self) -> Fraction:
        return max(abs(self.x), abs(self.y))

    def midpoint(self, other: Point2) -> Point2:
        return Point2((self.x + other.x) / 2, (self.y + other.y) / 2)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def to_list(self) -> list:
        return [format_rational(self.x), format_rational(self.y)]

    def __str__(self) -> str:
        x, y = self.to_list()
        return f"({x},{y})"


@dataclass(frozen=True, order=True)
class PointD:
    """A point of R^d with Fraction coordinates."""
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_rational(c) for c in self.coords))

    @classmethod
    def of(cls, value: "PointD | Iterable") -> "PointD":
        if isinstance(value, PointD):
            return value
        return cls(tuple(value))

    @property
    def d(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __sub__(self, other: PointD) -> PointD:
        return PointD(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __add__(self, other: PointD) -> PointD:
        return PointD(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> PointD:
        return PointD(tuple(-a for a in self.coords))

    def to_list(self) -> list:
        return [format_rational(c) for c in self.coords]

    @classmethod
    def unit(cls, d: int, i: int, value=1) -> "PointD":
        """The point with `value` on coordinate i and 0 elsewhere."""
        return cls(tuple(value if k == i else 0 for k in range(d)))


ORIGIN = Point2(0, 0)

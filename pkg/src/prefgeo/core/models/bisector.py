"""Data models for bisector hypersurfaces and their intersections.

A bisector H(c1, c2) is one of three variants:

- LineBisector: a straight line a*x + b*y = c (every l2 bisector, and l1
  bisectors of candidates sharing an x or y coordinate)
- PolyBisector: two parallel half-lines joined by a slope +1/-1 segment
  (the generic l1 shape; linf bisectors are its 45 degree image)
- QuadrantBisector: the degenerate l1 shape of candidates with dx == dy,
  a segment between two free corners plus a closed quadrant at each corner

Every variant exposes its straight pieces as Piece objects (origin,
direction, parameter range) so that intersection, arrangement and drawing
code handles all of them uniformly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from prefgeo.core.enums import BisectorKind, IntersectionKind, NormTag
from prefgeo.core.models.point import Point2
from prefgeo.core.utils.rational import format_rational as fr


@dataclass(frozen=True)
class Piece:
    """The point set {origin + t * direction : lo <= t <= hi}.

    A bound of None is unbounded on that side: segments use [0, 1], rays
    [0, None] and lines [None, None].
    """
    origin: Point2
    direction: Point2
    lo: Fraction | None = Fraction(0)
    hi: Fraction | None = Fraction(1)

    def __post_init__(self):
        if self.direction.is_zero():
            raise ValueError("Piece direction must be non-zero")

    @classmethod
    def segment(cls, start: Point2, end: Point2) -> "Piece":
        return cls(start, end - start, Fraction(0), Fraction(1))

    @classmethod
    def ray(cls, origin: Point2, direction: Point2) -> "Piece":
        return cls(origin, direction, Fraction(0), None)

    @classmethod
    def line(cls, origin: Point2, direction: Point2) -> "Piece":
        return cls(origin, direction, None, None)

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def normal(self) -> Point2:
        return Point2(-self.direction.y, self.direction.x)

    def at(self, t) -> Point2:
        return self.origin + self.direction.scale(t)

    def in_range(self, t) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def param_of(self, p: Point2) -> Fraction | None:
        """Line parameter of p, or None when p is off the supporting line."""
        w = p - self.origin
        if w.cross(self.direction) != 0:
            return None
        return w.dot(self.direction) / self.direction.dot(self.direction)

    def contains(self, p: Point2) -> bool:
        t = self.param_of(p)
        return t is not None and self.in_range(t)

    def endpoints(self) -> tuple[Point2 | None, Point2 | None]:
        return (
            None if self.lo is None else self.at(self.lo),
            None if self.hi is None else self.at(self.hi),
        )

    def line_offset(self) -> Fraction:
        """c in normal . p = c for the supporting line."""
        return self.normal.dot(self.origin)


@dataclass(frozen=True)
class LineBisector:
    """The line a*x + b*y = c."""
    a: Fraction
    b: Fraction
    c: Fraction
    norm: NormTag = NormTag.L2
    kind: BisectorKind | None = None

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("Line needs (a, b) != (0, 0)")

    def pieces(self) -> tuple[Piece, ...]:
        n2 = self.a * self.a + self.b * self.b
        foot = Point2(self.a * self.c / n2, self.b * self.c / n2)
        return (Piece.line(foot, Point2(-self.b, self.a)),)

    def contains(self, p: Point2) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def describe(self) -> str:
        if self.b == 0:
            return f"x={fr(self.c / self.a)}"
        if self.a == 0:
            return f"y={fr(self.c / self.b)}"
        return f"{fr(self.a)}*x+{fr(self.b)}*y={fr(self.c)}"


@dataclass(frozen=True)
class PolyBisector:
    """Half-line from seg_lo along lo_dir, segment seg_lo..seg_hi, half-line from seg_hi along hi_dir.

    For l1 vertical kinds seg_lo sits at height min(y1, y2) with lo_dir pointing
    down; horizontal kinds start at min(x1, x2) with lo_dir pointing left. linf
    bisectors store the rotated image and keep the kind of the rotated frame.
    """
    kind: BisectorKind
    seg_lo: Point2
    seg_hi: Point2
    lo_dir: Point2
    hi_dir: Point2
    norm: NormTag = NormTag.L1

    def pieces(self) -> tuple[Piece, ...]:
        return (
            Piece.ray(self.seg_lo, self.lo_dir),
            Piece.segment(self.seg_lo, self.seg_hi),
            Piece.ray(self.seg_hi, self.hi_dir),
        )

    def contains(self, p: Point2) -> bool:
        return any(piece.contains(p) for piece in self.pieces())


@dataclass(frozen=True)
class QuadrantBisector:
    """Degenerate bisector of a dx == dy pair.

    m1 and m2 are the free corners of the square spanned by the candidates.
    The bisector is the segment m1..m2 together with, at each corner M, the
    closed quadrant pointing away from the square's center.
    """
    m1: Point2
    m2: Point2
    norm: NormTag = NormTag.L1
    kind: BisectorKind = field(default=BisectorKind.QUADRANT_DEGENERATE, init=False)

    def _frame(self, p: Point2) -> Point2:
        if self.norm is NormTag.LINF:
            return Point2((p.x + p.y) / 2, (p.y - p.x) / 2)
        return p

    def contains(self, p: Point2) -> bool:
        q, m1, m2 = self._frame(p), self._frame(self.m1), self._frame(self.m2)
        if Piece.segment(m1, m2).contains(q):
            return True
        center = m1.midpoint(m2)
        for corner in (m1, m2):
            away = corner - center
            rel = q - corner
            if rel.x * away.x >= 0 and rel.y * away.y >= 0:
                return True
        return False

    def pieces(self) -> tuple[Piece, ...]:
        """Boundary pieces: the diagonal and the two sides of each quadrant."""
        center = self.m1.midpoint(self.m2)
        out = [Piece.segment(self.m1, self.m2)]
        for corner in (self.m1, self.m2):
            if self.norm is NormTag.LINF:
                # rotated frame: the quadrant sides are the images of the axis directions
                ex, ey = Point2(1, 1), Point2(-1, 1)
                local = self._frame(corner) - self._frame(center)
                dirs = (ex.scale(1 if local.x > 0 else -1), ey.scale(1 if local.y > 0 else -1))
            else:
                away = corner - center
                dirs = (Point2(1 if away.x > 0 else -1, 0), Point2(0, 1 if away.y > 0 else -1))
            out.extend(Piece.ray(corner, d) for d in dirs)
        return tuple(out)


Bisector = LineBisector | PolyBisector | QuadrantBisector


@dataclass(frozen=True)
class IntersectionResult:
    """Intersection of two bisectors.

    Attributes:
        kind: EMPTY, ONE, TWO or INFINITE.
        points: The finite intersection points, sorted (empty for EMPTY).
        overlaps: Positive-length shared pieces (INFINITE only).
    """
    kind: IntersectionKind
    points: tuple[Point2, ...] = ()
    overlaps: tuple[Piece, ...] = ()


@dataclass(frozen=True)
class Parallelogram:
    """Vertex cycle ci, a, cj, b bounded by the slope +1/-1 lines through ci and cj."""
    ci: Point2
    a: Point2
    cj: Point2
    b: Point2

    def contains(self, p: Point2) -> bool:
        """Strict interior test via the two diagonal strips."""
        u_lo, u_hi = sorted((self.ci.x - self.ci.y, self.cj.x - self.cj.y))
        v_lo, v_hi = sorted((self.ci.x + self.ci.y, self.cj.x + self.cj.y))
        return u_lo < p.x - p.y < u_hi and v_lo < p.x + p.y < v_hi

    def vertices(self) -> tuple[Point2, Point2, Point2, Point2]:
        return (self.ci, self.a, self.cj, self.b)

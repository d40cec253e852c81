"""Construction and classification of pairwise bisectors.

l2 bisectors are perpendicular bisector lines. Generic l1 bisectors are
three-piece polylines whose diagonal segment joins the two points at l1
distance (dx + dy)/2 from both candidates. linf bisectors are obtained by
building the l1 bisector of the unrotated candidates and rotating it back.
"""
import logging
from fractions import Fraction

from prefgeo.core.enums import BisectorKind, NormTag, Side
from prefgeo.core.exceptions import IdenticalCandidates
from prefgeo.core.geometry.distance import rotate45, side, unrotate45
from prefgeo.core.models.bisector import (
    Bisector,
    LineBisector,
    PolyBisector,
    QuadrantBisector,
)
from prefgeo.core.models.point import Point2

DOWN, UP, LEFT, RIGHT = Point2(0, -1), Point2(0, 1), Point2(-1, 0), Point2(1, 0)


def classify_bisector_l1(c1: Point2, c2: Point2) -> BisectorKind:
    """Classify H(c1, c2) under l1.

    Args:
        c1: First candidate.
        c2: Second candidate.

    Returns:
        BisectorKind: AXIS_ALIGNED when dx or dy is 0, QUADRANT_DEGENERATE when
        dx == dy, otherwise V-/V+ (dx > dy) or H-/H+ (dy > dx) with the Minus
        suffix when the x- and y-orders of the candidates agree.

    Raises:
        IdenticalCandidates: If c1 == c2.

    Examples:
        >>> classify_bisector_l1(Point2(2, 2), Point2(5, 4))
        <BisectorKind.V_MINUS: 'V-'>
        >>> classify_bisector_l1(Point2(2, 5), Point2(4, 1))
        <BisectorKind.H_PLUS: 'H+'>
    """
    if c1 == c2:
        raise IdenticalCandidates(f"candidates coincide at {c1}")
    dx, dy = c2.x - c1.x, c2.y - c1.y
    if dx == 0 or dy == 0:
        return BisectorKind.AXIS_ALIGNED
    if abs(dx) == abs(dy):
        return BisectorKind.QUADRANT_DEGENERATE
    agree = (dx > 0) == (dy > 0)
    if abs(dx) > abs(dy):
        return BisectorKind.V_MINUS if agree else BisectorKind.V_PLUS
    return BisectorKind.H_MINUS if agree else BisectorKind.H_PLUS


def _l2_line(c1: Point2, c2: Point2, norm: NormTag, kind=None) -> LineBisector:
    a = c2.x - c1.x
    b = c2.y - c1.y
    c = (c2.x * c2.x + c2.y * c2.y - c1.x * c1.x - c1.y * c1.y) / 2
    return LineBisector(Fraction(a), Fraction(b), Fraction(c), norm=norm, kind=kind)


def _build_l1(c1: Point2, c2: Point2) -> Bisector:
    kind = classify_bisector_l1(c1, c2)

    if kind is BisectorKind.AXIS_ALIGNED:
        # same line as l2 when the candidates share a coordinate
        return _l2_line(c1, c2, NormTag.L1, kind)

    if kind is BisectorKind.QUADRANT_DEGENERATE:
        m1 = Point2(c2.x, c1.y)
        m2 = Point2(c1.x, c2.y)
        logging.warning(f"quadrant-degenerate l1 bisector for {c1} and {c2}")
        return QuadrantBisector(min(m1, m2), max(m1, m2), NormTag.L1)

    if kind.is_vertical:
        a, b = sorted((c1, c2), key=lambda p: p.x)

        def x_at(y):
            return (a.x + b.x + abs(y - b.y) - abs(y - a.y)) / 2

        y_lo, y_hi = min(a.y, b.y), max(a.y, b.y)
        return PolyBisector(
            kind, Point2(x_at(y_lo), y_lo), Point2(x_at(y_hi), y_hi), DOWN, UP, NormTag.L1
        )

    a, b = sorted((c1, c2), key=lambda p: p.y)

    def y_at(x):
        return (a.y + b.y + abs(x - b.x) - abs(x - a.x)) / 2

    x_lo, x_hi = min(a.x, b.x), max(a.x, b.x)
    return PolyBisector(
        kind, Point2(x_lo, y_at(x_lo)), Point2(x_hi, y_at(x_hi)), LEFT, RIGHT, NormTag.L1
    )


def _rotate_bisector(b: Bisector) -> Bisector:
    """Image under rotate45 of a bisector built in the unrotated frame."""
    match b:
        case LineBisector(a=a, b=bb, c=c, kind=kind):
            return LineBisector((a - bb) / 2, (a + bb) / 2, c, norm=NormTag.LINF, kind=kind)
        case PolyBisector():
            return PolyBisector(
                b.kind,
                rotate45(b.seg_lo),
                rotate45(b.seg_hi),
                rotate45(b.lo_dir),
                rotate45(b.hi_dir),
                NormTag.LINF,
            )
        case QuadrantBisector():
            return QuadrantBisector(rotate45(b.m1), rotate45(b.m2), NormTag.LINF)
    raise TypeError(f"Unknown bisector variant: {b!r}")


def build_bisector(norm: NormTag, c1: Point2, c2: Point2) -> Bisector:
    """Build H(c1, c2) under norm.

    Args:
        norm: L1, L2 or LINF.
        c1: First candidate.
        c2: Second candidate.

    Returns:
        Bisector: LineBisector for l2 and axis-aligned l1/linf pairs,
        PolyBisector for generic l1/linf pairs, QuadrantBisector for dx == dy
        (a warning is logged; callers needing genericity must perturb first).

    Raises:
        IdenticalCandidates: If c1 == c2.

    Examples:
        >>> b = build_bisector(NormTag.L1, Point2(3, 3), Point2(8, 6))
        >>> b.kind, str(b.seg_lo), str(b.seg_hi)
        (<BisectorKind.V_MINUS: 'V-'>, '(7,3)', '(4,6)')
    """
    if c1 == c2:
        raise IdenticalCandidates(f"candidates coincide at {c1}")
    match NormTag(norm):
        case NormTag.L2:
            return _l2_line(c1, c2, NormTag.L2)
        case NormTag.L1:
            return _build_l1(c1, c2)
        case NormTag.LINF:
            return _rotate_bisector(_build_l1(unrotate45(c1), unrotate45(c2)))


def bisector_kind(norm: NormTag, c1: Point2, c2: Point2) -> BisectorKind:
    """l1 kind of H(c1, c2); under linf the kind in the unrotated frame."""
    if NormTag(norm) is NormTag.LINF:
        return classify_bisector_l1(unrotate45(c1), unrotate45(c2))
    return classify_bisector_l1(c1, c2)


def on_bisector(b: Bisector, p: Point2) -> bool:
    """Exact membership of p in the bisector b."""
    return b.contains(p)


def on_bisector_of(norm: NormTag, c1: Point2, c2: Point2, p: Point2) -> bool:
    """Membership via distance equality, without building the bisector."""
    return side(norm, c1, c2, p) is Side.ON_BOUNDARY

"""Exact distance comparison keys and the 45 degree rotation map.

distance_key returns a value that orders points exactly like the true
distance within one norm: l1 and linf distances are already rational, and
l2 uses the squared distance.
"""
from fractions import Fraction

from prefgeo.core.enums import NormTag, Side
from prefgeo.core.exceptions import IdenticalCandidates
from prefgeo.core.models.point import Point2


def distance_key(norm: NormTag, p: Point2, q: Point2) -> Fraction:
    """Comparison key for the distance between p and q under norm.

    Args:
        norm: L1, L2 or LINF.
        p: First point.
        q: Second point.

    Returns:
        Fraction: |dx|+|dy| (L1), dx^2+dy^2 (L2, squared) or max(|dx|,|dy|) (LINF).

    Examples:
        >>> distance_key(NormTag.L1, Point2("11/2", 8), Point2(0, 8))
        Fraction(11, 2)
        >>> distance_key(NormTag.LINF, Point2(0, 0), Point2(3, -4))
        Fraction(4, 1)
    """
    dx = abs(p.x - q.x)
    dy = abs(p.y - q.y)
    match NormTag(norm):
        case NormTag.L1:
            return dx + dy
        case NormTag.L2:
            return dx * dx + dy * dy
        case NormTag.LINF:
            return max(dx, dy)


def side(norm: NormTag, c1: Point2, c2: Point2, p: Point2) -> Side:
    """Which of c1, c2 is strictly closer to p (or neither).

    Raises:
        IdenticalCandidates: If c1 == c2.
    """
    if c1 == c2:
        raise IdenticalCandidates(f"candidates coincide at {c1}")
    diff = distance_key(norm, p, c2) - distance_key(norm, p, c1)
    if diff > 0:
        return Side.CLOSER_TO_FIRST
    if diff < 0:
        return Side.CLOSER_TO_SECOND
    return Side.ON_BOUNDARY


def rotate45(p: Point2) -> Point2:
    """(x, y) -> (x - y, x + y); the l1 norm of p equals the linf norm of the image.

    Examples:
        >>> rotate45(Point2(3, 4))
        Point2(x=Fraction(-1, 1), y=Fraction(7, 1))
    """
    return Point2(p.x - p.y, p.x + p.y)


def unrotate45(p: Point2) -> Point2:
    """Exact inverse of rotate45: (u, v) -> ((u + v)/2, (v - u)/2)."""
    return Point2((p.x + p.y) / 2, (p.y - p.x) / 2)

"""Exact intersection of bisectors.

Two bisectors are intersected piece by piece. Every piece is a parametric
segment, ray or line, so a single routine covers ray x ray, ray x segment,
segment x segment and line x piece. Finite points are collected and
deduplicated; any positive-length collinear overlap makes the result
INFINITE.
"""
import itertools
import logging
from collections import defaultdict
from typing import Sequence

from prefgeo.core.enums import BisectorKind, IntersectionKind, NormTag
from prefgeo.core.exceptions import DegenerateInput
from prefgeo.core.geometry.bisector import build_bisector, bisector_kind
from prefgeo.core.geometry.distance import distance_key, rotate45, unrotate45
from prefgeo.core.models.bisector import Bisector, IntersectionResult, Piece, QuadrantBisector
from prefgeo.core.models.point import Point2
from prefgeo.core.models.report import Pair


def _interval_meet(lo1, hi1, lo2, hi2):
    """Intersection of two parameter intervals whose None bounds are infinite."""
    if lo1 is None:
        lo = lo2
    elif lo2 is None:
        lo = lo1
    else:
        lo = max(lo1, lo2)
    if hi1 is None:
        hi = hi2
    elif hi2 is None:
        hi = hi1
    else:
        hi = min(hi1, hi2)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def intersect_pieces(p: Piece, q: Piece) -> Point2 | Piece | None:
    """Intersect two pieces.

    Returns:
        None when disjoint, a Point2 for a single crossing or touching point,
        or a Piece (expressed on p's parametrization) for a positive-length overlap.
    """
    d1, d2 = p.direction, q.direction
    w = q.origin - p.origin
    denom = d1.cross(d2)

    if denom != 0:
        t = w.cross(d2) / denom
        u = w.cross(d1) / denom
        if p.in_range(t) and q.in_range(u):
            return p.at(t)
        return None

    if w.cross(d1) != 0:
        return None

    # collinear: express q's range on p's parameter
    dd = d1.dot(d1)
    s0 = w.dot(d1) / dd
    k = d2.dot(d1) / dd
    ends = [None if b is None else s0 + k * b for b in (q.lo, q.hi)]
    if k < 0:
        ends.reverse()
    lo2, hi2 = ends
    meet = _interval_meet(p.lo, p.hi, lo2, hi2)
    if meet is None:
        return None
    lo, hi = meet
    if lo is not None and hi is not None and lo == hi:
        return p.at(lo)
    return Piece(p.origin, d1, lo, hi)


def intersect(b1: Bisector, b2: Bisector) -> IntersectionResult:
    """Intersect two bisectors.

    Only one-dimensional bisectors are accepted. A quadrant-degenerate
    bisector contains two closed quadrants, so its meet with another bisector
    is not a set of points and pieces; such inputs are rejected rather than
    answered, and callers repair them with perturb_generic first.

    Args:
        b1: First bisector.
        b2: Second bisector (from a different candidate pair).

    Returns:
        IntersectionResult: EMPTY, ONE or TWO with the sorted points, or
        INFINITE carrying every positive-length overlap piece.

    Raises:
        DegenerateInput: If either bisector is a QuadrantBisector, or the
            bisectors meet in more than two isolated points.
    """
    if isinstance(b1, QuadrantBisector) or isinstance(b2, QuadrantBisector):
        raise DegenerateInput("quadrant-degenerate bisectors must be perturbed before intersecting")

    points: set[Point2] = set()
    overlaps: list[Piece] = []
    for p in b1.pieces():
        for q in b2.pieces():
            hit = intersect_pieces(p, q)
            if isinstance(hit, Piece):
                overlaps.append(hit)
            elif hit is not None:
                points.add(hit)

    if overlaps:
        return IntersectionResult(IntersectionKind.INFINITE, tuple(sorted(points)), tuple(overlaps))
    ordered = tuple(sorted(points))
    match len(ordered):
        case 0:
            return IntersectionResult(IntersectionKind.EMPTY)
        case 1:
            return IntersectionResult(IntersectionKind.ONE, ordered)
        case 2:
            return IntersectionResult(IntersectionKind.TWO, ordered)
    raise DegenerateInput(f"bisectors meet in {len(ordered)} isolated points")


def _equidistant(norm: NormTag, p: Point2, cs: Sequence[Point2]) -> bool:
    keys = {distance_key(norm, p, c) for c in cs}
    return len(keys) == 1


def triple_intersection(c1: Point2, c2: Point2, c3: Point2, norm: NormTag) -> IntersectionResult:
    """The common point of H(c1,c2), H(c1,c3) and H(c2,c3), if any.

    Under l1 the result is EMPTY exactly when the three bisectors share an
    orientation; otherwise one vertical and one horizontal bisector are
    intersected and the point is verified equidistant from all three
    candidates. Under l2 it is the circumcenter (EMPTY for collinear
    candidates). linf is handled in the unrotated frame.

    Raises:
        DegenerateInput: If a pair is quadrant-degenerate.
    """
    norm = NormTag(norm)
    cs = (c1, c2, c3)

    if norm is NormTag.LINF:
        res = triple_intersection(*(unrotate45(c) for c in cs), NormTag.L1)
        return IntersectionResult(res.kind, tuple(rotate45(p) for p in res.points))

    pairs = [(0, 1), (0, 2), (1, 2)]
    if norm is NormTag.L2:
        hit = intersect(build_bisector(norm, c1, c2), build_bisector(norm, c1, c3))
        if hit.kind is IntersectionKind.ONE and _equidistant(norm, hit.points[0], cs):
            return hit
        return IntersectionResult(IntersectionKind.EMPTY)

    kinds = {pair: bisector_kind(norm, cs[pair[0]], cs[pair[1]]) for pair in pairs}
    if any(k is BisectorKind.QUADRANT_DEGENERATE for k in kinds.values()):
        raise DegenerateInput("triple intersection needs non-quadrant bisectors")

    def vertical(pair) -> bool:
        k = kinds[pair]
        if k is BisectorKind.AXIS_ALIGNED:
            # equal y gives the vertical line x = mid
            return cs[pair[0]].y == cs[pair[1]].y
        return k.is_vertical

    verticals = [pr for pr in pairs if vertical(pr)]
    horizontals = [pr for pr in pairs if not vertical(pr)]
    if not verticals or not horizontals:
        return IntersectionResult(IntersectionKind.EMPTY)

    v, h = verticals[0], horizontals[0]
    hit = intersect(
        build_bisector(norm, cs[v[0]], cs[v[1]]),
        build_bisector(norm, cs[h[0]], cs[h[1]]),
    )
    found = [p for p in hit.points if _equidistant(norm, p, cs)]
    if len(found) == 1:
        return IntersectionResult(IntersectionKind.ONE, (found[0],))
    logging.debug(f"no unique l1 equidistant point for {[str(c) for c in cs]}: {hit.kind}")
    return IntersectionResult(IntersectionKind.EMPTY)


def pairwise_vertices(
    bisectors: dict[Pair, Bisector],
) -> tuple[dict[Point2, set[Pair]], list[tuple[Pair, Pair]]]:
    """All isolated intersection points of a family of bisectors.

    Args:
        bisectors: Bisector of each candidate pair.

    Returns:
        (vertices, infinite): every intersection point mapped to the pairs whose
        bisectors pass through it, and the bisector pairs overlapping infinitely.
        Quadrant bisectors are skipped.
    """
    vertices: dict[Point2, set[Pair]] = defaultdict(set)
    infinite: list[tuple[Pair, Pair]] = []
    keys = sorted(k for k, b in bisectors.items() if not isinstance(b, QuadrantBisector))
    for e, f in itertools.combinations(keys, 2):
        res = intersect(bisectors[e], bisectors[f])
        if res.kind is IntersectionKind.INFINITE:
            infinite.append((e, f))
        for p in res.points:
            vertices[p].update((e, f))
    # a vertex may lie on further bisectors that only touch it through an overlap
    for p, through in (vertices.items() if infinite else ()):
        for k in keys:
            if k not in through and bisectors[k].contains(p):
                through.add(k)
    return dict(vertices), infinite


def build_bisectors(norm: NormTag, positions: Sequence[Point2]) -> dict[Pair, Bisector]:
    """H(ci, cj) for every i < j."""
    return {
        (i, j): build_bisector(norm, positions[i], positions[j])
        for i, j in itertools.combinations(range(len(positions)), 2)
    }
"""Critical points of a bisector arrangement.

Vertices are the pairwise bisector intersections, each annotated with the
candidate pairs whose bisectors pass through it. Breakpoints are the
segment endpoints of polyline bisectors. Both are the anchors around which
cell witnesses are sampled.
"""
import functools
import logging
from typing import Iterable

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import DegenerateEmbedding
from prefgeo.core.geometry.degeneracy import detect_degeneracies
from prefgeo.core.geometry.intersect import build_bisectors, pairwise_vertices
from prefgeo.core.models.bisector import Bisector, LineBisector, PolyBisector
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2
from prefgeo.core.models.report import CriticalSet, Pair


def require_generic(emb: Embedding2, norm: NormTag):
    report = detect_degeneracies(emb.positions, norm=norm)
    if not report.is_empty():
        raise DegenerateEmbedding(
            f"embedding is not generic under {NormTag(norm).value}; perturb it first", report
        )


def arc_key(b: Bisector, p: Point2) -> tuple:
    """Sort key of a point along a bisector, from one unbounded end to the other."""
    if isinstance(b, LineBisector):
        return (0, b.pieces()[0].param_of(p))
    lo_ray, seg, hi_ray = b.pieces()
    t = lo_ray.param_of(p)
    if t is not None and lo_ray.in_range(t) and t > 0:
        return (0, -t)
    t = seg.param_of(p)
    if t is not None and seg.in_range(t):
        return (1, t)
    return (2, hi_ray.param_of(p))


def _same_direction(a: Point2, b: Point2) -> bool:
    return a.cross(b) == 0 and a.dot(b) > 0


def _unit(d: Point2) -> Point2:
    return d.scale(1 / d.norm_inf())


def _angle_cmp(a: Point2, b: Point2) -> int:
    """Exact counter-clockwise angle comparison from the positive x axis."""
    def half(d):
        return 0 if d.y > 0 or (d.y == 0 and d.x > 0) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    c = a.cross(b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def incident_directions(p: Point2, bisectors: Iterable[Bisector]) -> list[Point2]:
    """Unit (linf) directions of the bisector pieces leaving p, in counter-clockwise order."""
    out: list[Point2] = []
    for b in bisectors:
        for piece in b.pieces():
            t = piece.param_of(p)
            if t is None or not piece.in_range(t):
                continue
            if piece.lo is None or t > piece.lo:
                out.append(_unit(-piece.direction))
            if piece.hi is None or t < piece.hi:
                out.append(_unit(piece.direction))
    unique: list[Point2] = []
    for d in out:
        if not any(_same_direction(d, u) for u in unique):
            unique.append(d)
    return sorted(unique, key=functools.cmp_to_key(_angle_cmp))


def critical_points(emb: Embedding2, norm: NormTag) -> CriticalSet:
    """Vertices, breakpoints and per-bisector vertex order of a generic embedding.

    Args:
        emb: Candidate positions.
        norm: L1, L2 or LINF.

    Returns:
        CriticalSet: vertices with the pairs through them, breakpoints and
        traversals (vertices of each bisector in order along it).

    Raises:
        DegenerateEmbedding: If detect_degeneracies reports anything.
    """
    norm = NormTag(norm)
    require_generic(emb, norm)
    return _critical_from(build_bisectors(norm, emb.positions))


def _critical_from(bisectors: dict[Pair, Bisector]) -> CriticalSet:
    vertices, _ = pairwise_vertices(bisectors)
    breakpoints = frozenset(
        p for b in bisectors.values() if isinstance(b, PolyBisector) for p in (b.seg_lo, b.seg_hi)
    )
    on: dict[Pair, list[Point2]] = {pair: [] for pair in bisectors}
    for p, pairs in vertices.items():
        for pair in pairs:
            on[pair].append(p)
    traversals = {
        pair: tuple(sorted(pts, key=functools.partial(arc_key, bisectors[pair])))
        for pair, pts in on.items()
    }
    logging.debug(f"critical set: {len(vertices)} vertices, {len(breakpoints)} breakpoints")
    return CriticalSet(
        vertices={p: frozenset(pairs) for p, pairs in vertices.items()},
        breakpoints=breakpoints,
        traversals=traversals,
    )

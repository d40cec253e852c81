"""Exact enumeration of the preference cells of an embedding.

Cells are found by ranking exact seed points, never by building faces:

1. around every vertex and breakpoint, one seed inside each angular sector
   between consecutive incident bisector directions, plus the 8 compass
   offsets;
2. on both sides of the midpoint of every bounded bisector sub-piece (pieces
   split at vertices and breakpoints);
3. on the boundary of a large square, halfway (along the boundary) between
   consecutive crossings with the unbounded pieces.

Offsets use one global step eps, a quarter of the smallest positive gap
between anchor projections and line offsets over every piece normal and the
two axes, scaled by the normal's l1 length. A seed therefore never crosses a
line that does not pass through its anchor, so it lands in a cell incident
to the anchor. Seeds lying on a bisector are discarded and cells are
deduplicated by ranking. Every bounded cell has a vertex or breakpoint on
its boundary and every unbounded cell meets the square, so no cell is missed.
"""
import functools
import logging
from fractions import Fraction
from typing import Sequence

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import TieError
from prefgeo.core.geometry.distance import distance_key
from prefgeo.core.geometry.intersect import build_bisectors, intersect_pieces
from prefgeo.core.models.bisector import Bisector, Piece, PolyBisector
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2, Ranking
from prefgeo.core.models.report import Cell, CriticalSet, Pair
from prefgeo.core.arrangement.critical import (
    _critical_from,
    arc_key,
    incident_directions,
    require_generic,
)
from prefgeo.core.profiles.ranking import rank_by_keys
from prefgeo.core.utils.batch import batch_execute, chunked, resolve_workers
from prefgeo.core.utils.rational import min_positive_gap

COMPASS = tuple(
    Point2(x, y) for x, y in ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
)


def _canonical_normal(n: Point2) -> Point2:
    n = n.scale(1 / n.norm_inf())
    if n.x < 0 or (n.x == 0 and n.y < 0):
        n = -n
    return n


def sub_pieces(b: Bisector, splits: Sequence[Point2]) -> list[tuple[Point2, Point2]]:
    """Consecutive split points along b (each pair bounds a straight sub-piece)."""
    ordered = sorted(set(splits), key=functools.partial(arc_key, b))
    return list(zip(ordered, ordered[1:]))


def _splits(pair: Pair, b: Bisector, critical: CriticalSet) -> list[Point2]:
    pts = list(critical.traversals.get(pair, ()))
    if isinstance(b, PolyBisector):
        pts.extend((b.seg_lo, b.seg_hi))
    return pts


def safe_step(anchors: Sequence[Point2], pieces: Sequence[Piece]) -> Fraction:
    """Global seed offset (linf length) that keeps seeds next to their anchor."""
    classes: dict[Point2, list[Fraction]] = {Point2(1, 0): [], Point2(0, 1): []}
    for piece in pieces:
        n = _canonical_normal(piece.normal)
        classes.setdefault(n, []).append(n.dot(piece.origin))
    best: Fraction | None = None
    for n, offsets in classes.items():
        values = offsets + [n.dot(a) for a in anchors]
        gap = min_positive_gap(values)
        if gap is None:
            continue
        gap = gap / (abs(n.x) + abs(n.y))
        best = gap if best is None else min(best, gap)
    return Fraction(1) if best is None else best / 4


class Square:
    """Axis-aligned square boundary parametrized counter-clockwise from its lower-left corner."""

    def __init__(self, center: Point2, half: Fraction):
        self.center = center
        self.half = half
        self.lo = Point2(center.x - half, center.y - half)
        self.hi = Point2(center.x + half, center.y + half)

    @classmethod
    def around(cls, points: Sequence[Point2]) -> "Square":
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        spread = max(max(xs) - min(xs), max(ys) - min(ys))
        center = Point2((max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2)
        return cls(center, 3 * spread + 1)

    def sides(self) -> list[Piece]:
        lo, hi = self.lo, self.hi
        corners = [lo, Point2(hi.x, lo.y), hi, Point2(lo.x, hi.y)]
        return [Piece.segment(corners[i], corners[(i + 1) % 4]) for i in range(4)]

    def param(self, p: Point2) -> Fraction:
        w = 2 * self.half
        if p.y == self.lo.y:
            return p.x - self.lo.x
        if p.x == self.hi.x:
            return w + (p.y - self.lo.y)
        if p.y == self.hi.y:
            return 2 * w + (self.hi.x - p.x)
        return 3 * w + (self.hi.y - p.y)

    def point_at(self, s: Fraction) -> Point2:
        w = 2 * self.half
        s = s % (4 * w)
        if s <= w:
            return Point2(self.lo.x + s, self.lo.y)
        if s <= 2 * w:
            return Point2(self.hi.x, self.lo.y + (s - w))
        if s <= 3 * w:
            return Point2(self.hi.x - (s - 2 * w), self.hi.y)
        return Point2(self.lo.x, self.hi.y - (s - 3 * w))

    def crossings(self, pieces: Sequence[Piece]) -> list[Point2]:
        hits: set[Point2] = set()
        for piece in pieces:
            if piece.is_bounded:
                continue
            for side in self.sides():
                hit = intersect_pieces(piece, side)
                if isinstance(hit, Point2):
                    hits.add(hit)
        return sorted(hits, key=self.param)

    def arc_midpoints(self, crossings: Sequence[Point2]) -> list[Point2]:
        if not crossings:
            return [self.point_at(Fraction(0))]
        s = [self.param(p) for p in crossings]
        total = 8 * self.half
        out = []
        for i, a in enumerate(s):
            b = s[i + 1] if i + 1 < len(s) else s[0] + total
            out.append(self.point_at((a + b) / 2))
        return out


def rank_seeds(job: tuple[tuple[Point2, ...], NormTag, list[Point2]]) -> list[Ranking | None]:
    """Ranking of each seed, or None when the seed ties. Module level so it pickles."""
    positions, norm, seeds = job
    out: list[Ranking | None] = []
    for p in seeds:
        try:
            out.append(rank_by_keys([distance_key(norm, p, c) for c in positions]))
        except TieError:
            out.append(None)
    return out


def _anchor_seeds(p: Point2, dirs: Sequence[Point2], eps: Fraction) -> list[Point2]:
    seeds = []
    n = len(dirs)
    for i, d1 in enumerate(dirs):
        d2 = dirs[(i + 1) % n]
        if n > 1 and d1.cross(d2) > 0:
            w = d1 + d2
        else:
            w = Point2(-d1.y, d1.x)
        seeds.append(p + w.scale(eps / w.norm_inf()))
    seeds.extend(p + d.scale(eps) for d in COMPASS)
    return seeds


def arrangement_cells(
    positions: Sequence[Point2],
    norm: NormTag,
    bisectors: dict[Pair, Bisector],
    critical: CriticalSet,
    workers: int | None = 1,
) -> tuple[frozenset[Cell], int]:
    """Cells of an already validated arrangement and its number of square crossings."""
    pieces = [piece for b in bisectors.values() for piece in b.pieces()]

    anchors = sorted(set(critical.vertices) | set(critical.breakpoints))
    through: dict[Point2, set[Pair]] = {p: set(critical.vertices.get(p, ())) for p in anchors}
    for pair, b in bisectors.items():
        if isinstance(b, PolyBisector):
            through[b.seg_lo].add(pair)
            through[b.seg_hi].add(pair)

    midpoints: list[tuple[Point2, Point2]] = []
    for pair in sorted(bisectors):
        b = bisectors[pair]
        for a, c in sub_pieces(b, _splits(pair, b, critical)):
            midpoints.append((a.midpoint(c), c - a))

    eps = safe_step(anchors + [m for m, _ in midpoints], pieces)
    square = Square.around(list(positions) + anchors)
    crossings = square.crossings(pieces)

    inner: list[Point2] = []
    for p in anchors:
        dirs = incident_directions(p, (bisectors[k] for k in sorted(through[p])))
        inner.extend(_anchor_seeds(p, dirs, eps))
    for m, d in midpoints:
        n = Point2(-d.y, d.x)
        step = n.scale(eps / n.norm_inf())
        inner.extend((m + step, m - step))
    outer = square.arc_midpoints(crossings)

    seeds = inner + outer
    workers = resolve_workers(workers)
    jobs = [(tuple(positions), NormTag(norm), chunk) for chunk in chunked(seeds, workers)]
    rankings = [r for part in batch_execute(rank_seeds, jobs, workers) for r in part]

    witness: dict[Ranking, Point2] = {}
    unbounded: set[Ranking] = set()
    for i, (p, r) in enumerate(zip(seeds, rankings)):
        if r is None:
            continue
        witness.setdefault(r, p)
        if i >= len(inner):
            unbounded.add(r)

    logging.info(
        f"{len(anchors)} anchors, {len(seeds)} seeds, {len(witness)} cells, "
        f"{len(crossings)} square crossings"
    )
    cells = frozenset(Cell(r, p, r not in unbounded) for r, p in witness.items())
    return cells, len(crossings)


def enumerate_cells(emb: Embedding2, norm: NormTag, workers: int | None = 1) -> frozenset[Cell]:
    """Every realizable ranking of a generic embedding, with an exact witness.

    Args:
        emb: Candidate positions.
        norm: L1, L2 or LINF.
        workers: Processes used to rank seeds (1 = in-process, 0/None = psutil core count).

    Returns:
        frozenset[Cell]: One cell per distinct ranking; bounded is False when
        the ranking also occurs on the far square.

    Raises:
        DegenerateEmbedding: If the embedding is not generic.

    Examples:
        >>> from prefgeo.core.profiles.canonical import L1_MAXIMAL
        >>> len(enumerate_cells(L1_MAXIMAL, NormTag.L1))
        19
    """
    norm = NormTag(norm)
    require_generic(emb, norm)
    bisectors = build_bisectors(norm, emb.positions)
    cells, _ = arrangement_cells(emb.positions, norm, bisectors, _critical_from(bisectors), workers)
    return cells

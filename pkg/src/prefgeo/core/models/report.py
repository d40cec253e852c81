"""Result records returned by checks, audits and recognizers.

Each record is a frozen dataclass with a to_dict() producing plain JSON
values (ints, "p/q" strings, lists) for the CLI.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from prefgeo.core.enums import NormTag
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import HVCounts, Profile, Ranking

Pair = tuple[int, int]


@dataclass(frozen=True)
class VoterTie:
    voter: int
    point: Point2
    pair: Pair


@dataclass(frozen=True)
class FatPoint:
    """A point lying on four or more bisectors."""
    point: Point2
    pairs: tuple[Pair, ...]


@dataclass(frozen=True)
class DegeneracyReport:
    """Every reason an embedding fails to be generic.

    Attributes:
        square_pairs: Candidate pairs with dx == dy (quadrant bisectors).
        axis_pairs: Candidate pairs with dx == 0 or dy == 0.
        infinite_pairs: Bisector pairs (as pairs of candidate pairs) sharing a positive-length piece.
        fat_points: Points common to four or more bisectors.
        voter_ties: Voters equidistant from some candidate pair.
    """
    norm: NormTag = NormTag.L1
    square_pairs: frozenset[Pair] = frozenset()
    axis_pairs: frozenset[Pair] = frozenset()
    infinite_pairs: frozenset[tuple[Pair, Pair]] = frozenset()
    fat_points: tuple[FatPoint, ...] = ()
    voter_ties: tuple[VoterTie, ...] = ()

    def is_empty(self) -> bool:
        return not (
            self.square_pairs or self.axis_pairs or self.infinite_pairs
            or self.fat_points or self.voter_ties
        )

    is_generic = is_empty

    def geometry_is_generic(self) -> bool:
        """True when only voter ties (if any) are reported."""
        return not (self.square_pairs or self.axis_pairs or self.infinite_pairs or self.fat_points)

    def to_dict(self) -> dict:
        return {
            "norm": self.norm.value,
            "generic": self.is_empty(),
            "square_pairs": sorted(list(p) for p in self.square_pairs),
            "axis_pairs": sorted(list(p) for p in self.axis_pairs),
            "infinite_pairs": sorted([list(a), list(b)] for a, b in self.infinite_pairs),
            "fat_points": [
                {"point": f.point.to_list(), "bisectors": [list(p) for p in f.pairs]}
                for f in self.fat_points
            ],
            "voter_ties": [
                {"voter": t.voter, "point": t.point.to_list(), "pair": list(t.pair)}
                for t in self.voter_ties
            ],
        }


@dataclass(frozen=True)
class LastPlaceReport:
    """Last-ranked candidates against the l1 (2^d) or linf (2d) bound.

    rankings holds every voter's ranking when the report was built from voters.
    """
    norm: NormTag
    d: int
    last_place: frozenset[int]
    bound: int
    rankings: tuple[Ranking, ...] = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        return len(self.last_place) <= self.bound

    @property
    def tight(self) -> bool:
        return len(self.last_place) == self.bound

    def to_dict(self) -> dict:
        return {
            "norm": self.norm.value,
            "d": self.d,
            "last_place": sorted(self.last_place),
            "count": len(self.last_place),
            "bound": self.bound,
            "passed": self.passed,
            "tight": self.tight,
        } | ({"rankings": [list(r) for r in self.rankings]} if self.rankings else {})


@dataclass(frozen=True)
class SizeBoundReport:
    """Profile size against the known maximum for its norm and m.

    bound is None when no result applies (advisory only).
    """
    norm: NormTag
    m: int
    size: int
    bound: int | None

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.size <= self.bound

    @property
    def violation(self) -> bool:
        return not self.within_bound

    @property
    def advisory(self) -> bool:
        return self.bound is None

    def to_dict(self) -> dict:
        return {
            "norm": self.norm.value,
            "m": self.m,
            "size": self.size,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "advisory": self.advisory,
        }


@dataclass(frozen=True)
class L2Verdict:
    """Outcome of the 4-candidate l2 recognizer.

    witness names the canonical profile ("P1", "P2" or "P3") and permutation
    maps each candidate i of the input to permutation[i] in that profile.
    """
    euclidean: bool
    witness: str | None = None
    permutation: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "euclidean_l2": self.euclidean,
            "witness_profile": self.witness,
            "permutation": list(self.permutation) if self.permutation is not None else None,
        }


@dataclass(frozen=True)
class CriticalSet:
    """Bisector intersection vertices and polyline breakpoints of an embedding.

    Attributes:
        vertices: Each vertex mapped to the candidate pairs whose bisectors pass through it.
        breakpoints: Segment endpoints of PolyBisectors.
        traversals: For each candidate pair, its vertices ordered along the bisector.
    """
    vertices: dict[Point2, frozenset[Pair]]
    breakpoints: frozenset[Point2]
    traversals: dict[Pair, tuple[Point2, ...]]

    def order_of(self, vertex: Point2) -> int:
        """k in "k-intersection": number of bisectors through the vertex."""
        return len(self.vertices[vertex])


@dataclass(frozen=True, order=True)
class Cell:
    """A realizable ranking with an exact witness point strictly inside its region."""
    ranking: Ranking
    witness: Point2
    bounded: bool = True

    def to_dict(self) -> dict:
        return {"ranking": list(self.ranking), "witness": self.witness.to_list(), "bounded": self.bounded}


@dataclass(frozen=True)
class ArrangementGraph:
    """Vertex / edge / cell counts of a bisector arrangement."""
    m: int
    norm: NormTag
    n_v: int
    n_e: int
    unbounded_cells: int
    cells: frozenset[Cell]
    critical: CriticalSet | None = field(default=None, compare=False)

    @property
    def n_z(self) -> int:
        return len({c.ranking for c in self.cells})

    def profile(self) -> Profile:
        return Profile(self.m, frozenset(c.ranking for c in self.cells))

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "norm": self.norm.value,
            "n_v": self.n_v,
            "n_e": self.n_e,
            "unbounded_cells": self.unbounded_cells,
            "n_z": self.n_z,
        }


@dataclass(frozen=True)
class EulerReport:
    """Cell count against n_e - n_v + 1 + unbounded_cells (plus the m=4 limits)."""
    n_z: int
    euler_bound: int
    m4_vertex_limit: int | None = None
    m4_cell_limit: int | None = None
    n_v: int = 0

    @property
    def euler_ok(self) -> bool:
        return self.n_z <= self.euler_bound

    @property
    def m4_ok(self) -> bool:
        if self.m4_cell_limit is None:
            return True
        return self.n_v <= self.m4_vertex_limit and self.n_z <= self.m4_cell_limit

    @property
    def passed(self) -> bool:
        return self.euler_ok and self.m4_ok

    @property
    def tight(self) -> bool:
        return self.n_z == self.euler_bound

    def to_dict(self) -> dict:
        return {
            "n_z": self.n_z,
            "euler_bound": self.euler_bound,
            "euler_ok": self.euler_ok,
            "m4_vertex_limit": self.m4_vertex_limit,
            "m4_cell_limit": self.m4_cell_limit,
            "m4_ok": self.m4_ok,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ThetaReport:
    """Bisector orientations of a theta construction against the expected counts."""
    m: int
    h: int
    v: int
    expected: HVCounts
    misoriented: tuple[Pair, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.misoriented and (self.h, self.v) == (self.expected.h, self.expected.v)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "horizontal": self.h,
            "vertical": self.v,
            "expected": {"h": self.expected.h, "v": self.expected.v},
            "cell_lower_bound": self.expected.cell_lower_bound,
            "misoriented": [list(p) for p in self.misoriented],
            "passed": self.passed,
        }

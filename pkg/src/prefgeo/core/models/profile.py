"""Data models for rankings, profiles and candidate embeddings.

Candidates are always 0-based indices. A ranking is a tuple of indices,
best first. Written rankings number candidates 1..m; they map to 0..m-1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from prefgeo.core.exceptions import DuplicateCandidates
from prefgeo.core.models.point import Point2, PointD

Ranking = tuple[int, ...]


def check_ranking(order: Iterable[int], m: int) -> Ranking:
    """Validate that order is a permutation of 0..m-1 and return it as a tuple."""
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(m)):
        raise ValueError(f"Ranking {list(order)} is not a permutation of 0..{m - 1}")
    return order


def parse_ranking(text: str) -> Ranking:
    """Parse a written 1-based ranking into a 0-based one.

    A bare digit string such as "4312" gives one candidate per character and
    so stops at m = 9. Larger rankings separate the numbers with commas or
    spaces, e.g. "10,2,1,3,4,5,6,7,8,9".

    Examples:
        >>> parse_ranking("4312")
        (3, 2, 0, 1)
        >>> parse_ranking("10 1 2 3 4 5 6 7 8 9")[:2]
        (9, 0)
    """
    text = text.strip()
    tokens = re.split(r"[\s,]+", text) if re.search(r"[\s,]", text) else list(text)
    return tuple(int(tok) - 1 for tok in tokens)


@dataclass(frozen=True)
class Profile:
    """A deduplicated set of strict rankings over m candidates.

    Attributes:
        m: Number of candidates.
        rankings: The distinct rankings, best first.
    """
    m: int
    rankings: frozenset[Ranking] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("A profile needs at least one candidate")
        object.__setattr__(
            self, "rankings", frozenset(check_ranking(r, self.m) for r in self.rankings)
        )

    @classmethod
    def from_strings(cls, m: int, texts: Iterable[str]) -> "Profile":
        """Build from written 1-based rankings, e.g. Profile.from_strings(4, ["1234", "4321"])."""
        return cls(m, frozenset(parse_ranking(t) for t in texts))

    def __len__(self) -> int:
        return len(self.rankings)

    def __iter__(self) -> Iterator[Ranking]:
        return iter(sorted(self.rankings))

    def __contains__(self, ranking) -> bool:
        return tuple(ranking) in self.rankings

    def issubset(self, other: "Profile") -> bool:
        return self.m == other.m and self.rankings <= other.rankings

    def to_strings(self) -> list[str]:
        return ["".join(str(i + 1) for i in r) for r in self]


@dataclass(frozen=True)
class Embedding2:
    """Planar positions of candidates; the index is the candidate id."""
    positions: tuple[Point2, ...]

    def __post_init__(self):
        positions = tuple(Point2.of(p) for p in self.positions)
        object.__setattr__(self, "positions", positions)
        seen: dict[Point2, int] = {}
        for i, p in enumerate(positions):
            if p in seen:
                raise DuplicateCandidates(f"candidates {seen[p]} and {i} share position {p}")
            seen[p] = i

    @classmethod
    def of(cls, points: Iterable) -> "Embedding2":
        return cls(tuple(Point2.of(p) for p in points))

    @property
    def m(self) -> int:
        return len(self.positions)

    def __getitem__(self, i: int) -> Point2:
        return self.positions[i]

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.positions)

    def __len__(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class EmbeddingD:
    """Candidates and voters in R^d."""
    d: int
    candidates: tuple[PointD, ...]
    voters: tuple[PointD, ...] = ()

    def __post_init__(self):
        candidates = tuple(PointD.of(p) for p in self.candidates)
        voters = tuple(PointD.of(p) for p in self.voters)
        for p in candidates + voters:
            if p.d != self.d:
                raise ValueError(f"Point {p.to_list()} is not {self.d}-dimensional")
        if len(set(candidates)) != len(candidates):
            raise DuplicateCandidates("two candidates share a position")
        object.__setattr__(self, "candidates", candidates)
        object.__setattr__(self, "voters", voters)

    @property
    def m(self) -> int:
        return len(self.candidates)


@dataclass(frozen=True)
class HVCounts:
    """Horizontal / vertical bisector counts of the theta construction."""
    h: int
    v: int

    @property
    def cell_lower_bound(self) -> int:
        return (self.h + 1) * (self.v + 1)

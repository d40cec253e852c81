"""Canonical maximal profiles and reference embeddings on small candidate sets.

Rankings are written 1-based and best first ("4312" means c4 > c3 > c1 > c2)
and converted to 0-based tuples on load.

- P0: the 19-ranking maximal l1 profile on 4 candidates
- P1, P2, P3: the three 18-ranking maximal l2 profiles on 4 candidates,
  pairwise non-isomorphic; P2 is P1 with every ranking reversed
- MIXED_PROFILE: a 9-ranking profile that is l1-Euclidean in the plane but not l2-Euclidean
"""
from dataclasses import dataclass

from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2, Profile

P0_RANKINGS = (
    "1234", "1243", "1324", "1342", "1423", "1432", "2134", "2143", "2413", "2431",
    "3142", "3412", "3421", "4123", "4132", "4213", "4231", "4312", "4321",
)

P1_RANKINGS = (
    "1234", "1243", "1423", "2134", "2143", "2314", "2341", "2413", "2431",
    "3214", "3241", "3421", "4123", "4132", "4213", "4231", "4312", "4321",
)

P2_RANKINGS = (
    "1234", "1243", "1324", "1342", "1423", "1432", "2134", "2314", "3124",
    "3142", "3214", "3241", "3412", "3421", "4123", "4132", "4312", "4321",
)

P3_RANKINGS = (
    "1234", "1243", "1324", "1423", "2134", "2143", "2314", "2341", "2413",
    "2431", "3124", "3214", "3241", "3421", "4123", "4213", "4231", "4321",
)

# one ranking per region of QUADRILATERAL under l1
MIXED_RANKINGS = ("4312", "3412", "4321", "3421", "2143", "2134", "1243", "1234", "2314")


@dataclass(frozen=True)
class CanonicalProfiles:
    p0: Profile
    p1: Profile
    p2: Profile
    p3: Profile

    def get(self, name: str) -> Profile:
        """Look up "p0".."p3" (case-insensitive)."""
        key = name.lower()
        if key not in {"p0", "p1", "p2", "p3"}:
            raise ValueError(f"Unknown canonical profile: {name!r}")
        return getattr(self, key)

    def l2_maximal(self) -> dict[str, Profile]:
        return {"P1": self.p1, "P2": self.p2, "P3": self.p3}


CANONICAL = CanonicalProfiles(
    p0=Profile.from_strings(4, P0_RANKINGS),
    p1=Profile.from_strings(4, P1_RANKINGS),
    p2=Profile.from_strings(4, P2_RANKINGS),
    p3=Profile.from_strings(4, P3_RANKINGS),
)

MIXED_PROFILE = Profile.from_strings(4, MIXED_RANKINGS)

# complete 3-candidate arrangement (all six rankings under l1 and l2)
TRIANGLE = Embedding2.of([(3, 3), (8, 6), (6, 2)])

# quadrilateral carrying MIXED_PROFILE under l1; its l1 graph has 7 vertices and 12 edges
QUADRILATERAL = Embedding2.of([(4, 1), (1, 6), (6, 8), (8, 2)])

# witness voters for MIXED_PROFILE on QUADRILATERAL under l1, in MIXED_RANKINGS order
MIXED_VOTERS = tuple(
    Point2(x, y)
    for x, y in (
        ("17/2", "17/4"), (6, "9/2"), ("17/2", "11/2"), ("67/10", "11/2"), (1, "13/4"),
        ("3/2", "19/4"), ("29/10", "13/4"), (4, "9/2"), ("3/2", 7),
    )
)

# realizes P0 under l1
L1_MAXIMAL = Embedding2.of([(0, 8), (10, 10), (4, 1), (8, 3)])

# 18 regions under l2
L2_MAXIMAL = Embedding2.of([(1, 5), (4, 2), (6, 8), (9, 3)])

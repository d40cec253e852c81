"""Tags shared across the geometry, profile and arrangement modules.

- NormTag: the three supported norms
- BisectorKind: the l1 bisector taxonomy (V-/V+/H-/H+ plus the two degenerate shapes)
- Side: outcome of a two-candidate distance comparison
- IntersectionKind: shape of the intersection of two bisectors
"""
from enum import Enum


class NormTag(str, Enum):
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


class BisectorKind(str, Enum):
    """Shape of an l1 (or rotated linf) bisector.

    VMinus/VPlus require dx > dy > 0, HMinus/HPlus require dy > dx > 0.
    The suffix is Minus when the y-order of the candidates agrees with their
    x-order and Plus when it opposes it.
    """
    V_MINUS = "V-"
    V_PLUS = "V+"
    H_MINUS = "H-"
    H_PLUS = "H+"
    AXIS_ALIGNED = "axis-aligned"
    QUADRANT_DEGENERATE = "quadrant-degenerate"

    @property
    def is_vertical(self) -> bool:
        return self in (BisectorKind.V_MINUS, BisectorKind.V_PLUS)

    @property
    def is_horizontal(self) -> bool:
        return self in (BisectorKind.H_MINUS, BisectorKind.H_PLUS)


class Side(str, Enum):
    CLOSER_TO_FIRST = "closer-to-first"
    CLOSER_TO_SECOND = "closer-to-second"
    ON_BOUNDARY = "on-boundary"


class IntersectionKind(str, Enum):
    EMPTY = "empty"
    ONE = "one"
    TWO = "two"
    INFINITE = "infinite"


NORM_CHOICES = [n.value for n in NormTag]

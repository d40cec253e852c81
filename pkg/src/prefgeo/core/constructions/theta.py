"""The planar l1 family whose cell count grows like m^4.

Candidates are placed one at a time. An even-indexed candidate (1-based)
sits centered above everything placed so far, high enough that all its new
bisectors are horizontal; an odd-indexed one sits centered to the right, so
all its new bisectors are vertical. H horizontal and V vertical bisectors
then cut the plane into at least (H + 1)(V + 1) cells.
"""
import logging

from prefgeo.core.enums import NormTag
from prefgeo.core.geometry.bisector import bisector_kind
from prefgeo.core.geometry.degeneracy import detect_degeneracies, perturb_generic
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2, HVCounts
from prefgeo.core.models.report import ThetaReport

C1, C2 = Point2(0, 0), Point2(1, 2)


def _next_position(k: int, placed: list[Point2]) -> Point2:
    xs = [p.x for p in placed]
    ys = [p.y for p in placed]
    if k % 2 == 0:
        return Point2((max(xs) + min(xs)) / 2, max(ys) + 2 * (max(xs) - min(xs)))
    return Point2(max(xs) + 2 * (max(ys) - min(ys)), (max(ys) + min(ys)) / 2)


def theta_m4_embedding(m: int) -> Embedding2:
    """Embedding of m candidates with (H_m + 1)(V_m + 1) or more l1 cells.

    Raises:
        ValueError: If m < 2.

    Examples:
        >>> theta_m4_embedding(4).positions[-1]
        Point2(x=Fraction(5, 2), y=Fraction(12, 1))
    """
    if m < 2:
        raise ValueError(f"theta construction needs m >= 2, got {m}")
    placed = [C1, C2]
    for k in range(3, m + 1):
        placed.append(_next_position(k, placed))

    if not detect_degeneracies(placed, norm=NormTag.L1).is_empty():
        logging.info(f"theta embedding for m={m} is degenerate, perturbing")
        placed = list(perturb_generic(placed, norm=NormTag.L1))
    return Embedding2(tuple(placed))


def hv_counts(m: int) -> HVCounts:
    """Horizontal and vertical bisector counts after m candidates.

    Examples:
        >>> hv_counts(4)
        HVCounts(h=4, v=2)
    """
    if m < 2:
        raise ValueError(f"theta construction needs m >= 2, got {m}")
    h, v = 1, 0
    for k in range(3, m + 1):
        if k % 2 == 0:
            h += k - 1
        else:
            v += k - 1
    return HVCounts(h, v)


def verify_theta(emb: Embedding2) -> ThetaReport:
    """Check that every bisector of candidate k against an earlier one has the expected orientation.

    Candidate k (1-based) should give horizontal bisectors when k is even and
    vertical ones when k is odd.
    """
    h = v = 0
    wrong = []
    for k in range(1, emb.m):
        for i in range(k):
            kind = bisector_kind(NormTag.L1, emb[i], emb[k])
            h += kind.is_horizontal
            v += kind.is_vertical
            expect_horizontal = (k + 1) % 2 == 0
            ok = kind.is_horizontal if expect_horizontal else kind.is_vertical
            if not ok:
                wrong.append((i, k))
    report = ThetaReport(emb.m, h, v, hv_counts(emb.m), tuple(wrong))
    if not report.passed:
        logging.warning(f"theta orientation check failed for pairs {wrong}")
    return report

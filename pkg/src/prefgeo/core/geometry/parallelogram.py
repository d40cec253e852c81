"""The parallelogram spanned by two points and the slope +1/-1 lines through them.

If a third candidate lies strictly inside the parallelogram of two others,
the three l1 bisectors are pairwise disjoint and the inner candidate is never
ranked last among the three.
"""
from prefgeo.core.exceptions import DegenerateDiagonal, IdenticalCandidates
from prefgeo.core.models.bisector import Parallelogram
from prefgeo.core.models.point import Point2


def parallelogram(ci: Point2, cj: Point2) -> Parallelogram:
    """Build paral(ci, cj).

    A is where the slope +1 line through ci meets the slope -1 line through
    cj, B where the slope -1 line through ci meets the slope +1 line through cj.

    Raises:
        IdenticalCandidates: If ci == cj.
        DegenerateDiagonal: If ci and cj share a slope +1 or slope -1 line.

    Examples:
        >>> par = parallelogram(Point2(3, 3), Point2(7, 5))
        >>> str(par.a), str(par.b)
        ('(6,6)', '(4,2)')
    """
    if ci == cj:
        raise IdenticalCandidates(f"candidates coincide at {ci}")
    if ci.x - ci.y == cj.x - cj.y or ci.x + ci.y == cj.x + cj.y:
        raise DegenerateDiagonal(f"{ci} and {cj} lie on a common diagonal")
    a = Point2(
        (ci.x - ci.y + cj.x + cj.y) / 2,
        (-ci.x + ci.y + cj.x + cj.y) / 2,
    )
    b = Point2(
        (cj.x - cj.y + ci.x + ci.y) / 2,
        (-cj.x + cj.y + ci.x + ci.y) / 2,
    )
    return Parallelogram(ci, a, cj, b)


def contains(par: Parallelogram, p: Point2) -> bool:
    """Strict interior membership; vertices and sides are outside."""
    return par.contains(p)


def triangle_containment(c1: Point2, c2: Point2, c3: Point2) -> int | None:
    """Index (0, 1 or 2) of the point strictly inside the parallelogram of the other two.

    Returns None when no point is inside or when a parallelogram degenerates.
    """
    cs = (c1, c2, c3)
    for inner, (i, j) in ((0, (1, 2)), (1, (0, 2)), (2, (0, 1))):
        try:
            par = parallelogram(cs[i], cs[j])
        except DegenerateDiagonal:
            continue
        if par.contains(cs[inner]):
            return inner
    return None

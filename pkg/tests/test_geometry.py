import itertools
from fractions import Fraction

import pytest

from prefgeo.core.enums import BisectorKind, IntersectionKind, NormTag, Side
from prefgeo.core.exceptions import DegenerateDiagonal, DegenerateInput, IdenticalCandidates
from prefgeo.core.geometry import (
    bisector_kind,
    build_bisector,
    build_bisectors,
    classify_bisector_l1,
    contains,
    distance_key,
    intersect,
    on_bisector,
    on_bisector_of,
    parallelogram,
    rotate45,
    side,
    triangle_containment,
    triple_intersection,
    unrotate45,
)
from prefgeo.core.models import LineBisector, Point2, PolyBisector, QuadrantBisector
from prefgeo.core.profiles import ranking_at

P = Point2


def test_distance_key_examples():
    assert distance_key(NormTag.L1, P("11/2", 8), P(0, 8)) == Fraction(11, 2)
    assert distance_key(NormTag.L2, P(3, 4), P(3, 4)) == 0
    assert distance_key(NormTag.L2, P(0, 0), P(3, 4)) == 25
    assert distance_key(NormTag.LINF, P(0, 0), P(3, -4)) == 4


@pytest.mark.parametrize("norm,c1,c2,p,expected", [
    (NormTag.L1, P(3, 3), P(8, 6), P(2, 8), Side.CLOSER_TO_FIRST),
    (NormTag.L1, P(0, 8), P(10, 10), P("11/2", 8), Side.CLOSER_TO_FIRST),
    (NormTag.L1, P(0, 0), P(2, 0), P(1, 5), Side.ON_BOUNDARY),
    (NormTag.L2, P(0, 0), P(2, 0), P(1, 5), Side.ON_BOUNDARY),
    (NormTag.LINF, P(0, 0), P(2, 0), P(1, 5), Side.ON_BOUNDARY),
    (NormTag.L2, P(0, 0), P(2, 0), P(3, 0), Side.CLOSER_TO_SECOND),
])
def test_side(norm, c1, c2, p, expected):
    assert side(norm, c1, c2, p) is expected


def test_side_rejects_identical_candidates():
    with pytest.raises(IdenticalCandidates):
        side(NormTag.L1, P(1, 1), P(1, 1), P(0, 0))


@pytest.mark.parametrize("c1,c2,kind", [
    (P(2, 2), P(5, 4), BisectorKind.V_MINUS),
    (P(2, 5), P(4, 1), BisectorKind.H_PLUS),
    (P(3, 3), P(6, 6), BisectorKind.QUADRANT_DEGENERATE),
    (P(3, 3), P(6, 3), BisectorKind.AXIS_ALIGNED),
    (P(3, 3), P(8, 6), BisectorKind.V_MINUS),
    (P(3, 3), P(6, 2), BisectorKind.V_PLUS),
    (P(0, 0), P(1, 2), BisectorKind.H_MINUS),
])
def test_classify_bisector_l1(c1, c2, kind):
    assert classify_bisector_l1(c1, c2) is kind
    assert classify_bisector_l1(c2, c1) is kind


def test_l1_bisector_closed_form_segments():
    b = build_bisector(NormTag.L1, P(3, 3), P(8, 6))
    assert isinstance(b, PolyBisector)
    assert b.kind is BisectorKind.V_MINUS
    assert {b.seg_lo, b.seg_hi} == {P(7, 3), P(4, 6)}

    b = build_bisector(NormTag.L1, P(3, 3), P(6, 2))
    assert b.kind is BisectorKind.V_PLUS
    assert {b.seg_lo, b.seg_hi} == {P(4, 2), P(5, 3)}


def test_l2_and_axis_bisectors_are_lines():
    b = build_bisector(NormTag.L2, P(0, 0), P(2, 0))
    assert isinstance(b, LineBisector)
    assert b.describe() == "x=1"
    assert on_bisector(b, P(1, 100))

    b = build_bisector(NormTag.L1, P(0, 0), P(0, 4))
    assert isinstance(b, LineBisector)
    assert b.describe() == "y=2"


def test_quadrant_bisector_is_flagged_not_raised():
    b = build_bisector(NormTag.L1, P(3, 3), P(6, 6))
    assert isinstance(b, QuadrantBisector)
    assert b.kind is BisectorKind.QUADRANT_DEGENERATE
    # the far corner quadrants are part of the bisector
    assert b.contains(P(0, 10))
    assert b.contains(P(10, 0))
    assert not b.contains(P(0, 0))


def test_on_bisector_examples():
    b = build_bisector(NormTag.L1, P(3, 3), P(8, 6))
    assert on_bisector(b, P("11/2", "9/2"))
    assert not on_bisector(b, P(0, 0))


def test_build_bisector_rejects_identical_candidates():
    with pytest.raises(IdenticalCandidates):
        build_bisector(NormTag.L2, P(1, 2), P(1, 2))


@pytest.mark.parametrize("p,expected", [
    (P(1, 0), P(1, 1)),
    (P(3, 4), P(-1, 7)),
    (P(0, 0), P(0, 0)),
])
def test_rotate45(p, expected):
    assert rotate45(p) == expected
    assert unrotate45(rotate45(p)) == p
    assert abs(p.x) + abs(p.y) == rotate45(p).norm_inf()


def _sample_points(rng, n, span=12):
    return [P(Fraction(rng.randint(-4 * span, 4 * span), 4), Fraction(rng.randint(-4 * span, 4 * span), 4))
            for _ in range(n)]


@pytest.mark.parametrize("norm", list(NormTag))
def test_bisector_membership_matches_distance_equality(norm, rng):
    for _ in range(150):
        c1, c2 = _sample_points(rng, 2, span=8)
        if c1 == c2:
            continue
        b = build_bisector(norm, c1, c2)
        if isinstance(b, QuadrantBisector):
            continue
        for p in _sample_points(rng, 40, span=10):
            equal = distance_key(norm, p, c1) == distance_key(norm, p, c2)
            assert on_bisector(b, p) == equal
            assert on_bisector_of(norm, c1, c2, p) == equal
        # every piece point is equidistant
        for piece in b.pieces():
            for t in (0, Fraction(1, 3), 1, 5):
                if piece.in_range(t):
                    q = piece.at(t)
                    assert distance_key(norm, q, c1) == distance_key(norm, q, c2)


def test_segment_endpoints_at_half_l1_distance(rng):
    for _ in range(200):
        c1, c2 = _sample_points(rng, 2)
        dx, dy = abs(c1.x - c2.x), abs(c1.y - c2.y)
        if dx == 0 or dy == 0 or dx == dy:
            continue
        b = build_bisector(NormTag.L1, c1, c2)
        for e in (b.seg_lo, b.seg_hi):
            assert distance_key(NormTag.L1, e, c1) == (dx + dy) / 2
            assert distance_key(NormTag.L1, e, c2) == (dx + dy) / 2


def test_linf_kind_is_l1_kind_of_unrotated_pair():
    c1, c2 = P(0, 0), P(5, 1)
    assert bisector_kind(NormTag.LINF, c1, c2) is classify_bisector_l1(unrotate45(c1), unrotate45(c2))


def test_intersect_examples():
    empty = intersect(
        build_bisector(NormTag.L1, P(0, 1), P(2, 2)),
        build_bisector(NormTag.L1, P("5/2", 6), P(6, 4)),
    )
    assert empty.kind is IntersectionKind.EMPTY

    two = intersect(
        build_bisector(NormTag.L1, P(0, 1), P(6, 3)),
        build_bisector(NormTag.L1, P("1/2", 3), P(4, 4)),
    )
    assert two.kind is IntersectionKind.TWO
    assert set(two.points) == {P("11/4", "9/4"), P(2, "15/4")}

    one = intersect(
        build_bisector(NormTag.L2, P(0, 0), P(2, 0)),
        build_bisector(NormTag.L2, P(0, 0), P(0, 4)),
    )
    assert one.kind is IntersectionKind.ONE
    assert one.points == (P(1, 2),)


def test_intersect_rejects_quadrants():
    with pytest.raises(DegenerateInput):
        intersect(
            build_bisector(NormTag.L1, P(3, 3), P(6, 6)),
            build_bisector(NormTag.L1, P(0, 0), P(5, 1)),
        )


def test_overlapping_bisectors_are_infinite():
    # two axis pairs sharing the midline x = 1
    res = intersect(
        build_bisector(NormTag.L2, P(0, 0), P(2, 0)),
        build_bisector(NormTag.L2, P(0, 5), P(2, 5)),
    )
    assert res.kind is IntersectionKind.INFINITE
    assert res.overlaps


def test_triple_intersection_examples():
    res = triple_intersection(P(3, 3), P(8, 6), P(6, 2), NormTag.L1)
    assert res.kind is IntersectionKind.ONE
    assert res.points == (P(5, 5),)

    assert triple_intersection(P(0, 0), P(10, 1), P(20, 0), NormTag.L1).kind is IntersectionKind.EMPTY
    assert triple_intersection(P(0, 0), P(2, 0), P(4, 0), NormTag.L2).kind is IntersectionKind.EMPTY

    with pytest.raises(DegenerateInput):
        triple_intersection(P(3, 3), P(6, 6), P(0, 1), NormTag.L1)


def test_triple_intersection_linf_maps_back(triangle):
    rotated = [rotate45(p) for p in triangle]
    res = triple_intersection(*rotated, NormTag.LINF)
    assert res.points == (rotate45(P(5, 5)),)


def _generic_l1(cs):
    for a, b in itertools.combinations(cs, 2):
        dx, dy = abs(a.x - b.x), abs(a.y - b.y)
        if dx == 0 or dy == 0 or dx == dy:
            return False
    return True


def _random_generic_triples(rng, n):
    out = []
    while len(out) < n:
        cs = [P(rng.randint(0, 30), rng.randint(0, 30)) for _ in range(3)]
        if len(set(cs)) == 3 and _generic_l1(cs):
            out.append(cs)
    return out


TRIPLES = [100, pytest.param(1000, marks=pytest.mark.slow)]


@pytest.mark.parametrize("n", TRIPLES)
def test_bisectors_sharing_a_candidate_meet_at_most_once(n, rng):
    for c1, c2, c3 in _random_generic_triples(rng, n):
        res = intersect(build_bisector(NormTag.L1, c1, c2), build_bisector(NormTag.L1, c1, c3))
        assert res.kind in (IntersectionKind.EMPTY, IntersectionKind.ONE)


@pytest.mark.parametrize("n", TRIPLES)
def test_triple_point_exists_iff_orientations_differ(n, rng):
    for cs in _random_generic_triples(rng, n):
        kinds = [classify_bisector_l1(a, b) for a, b in itertools.combinations(cs, 2)]
        same = all(k.is_vertical for k in kinds) or all(k.is_horizontal for k in kinds)
        res = triple_intersection(*cs, NormTag.L1)
        assert (res.kind is IntersectionKind.EMPTY) == same


def test_parallelogram_example():
    par = parallelogram(P(3, 3), P(7, 5))
    assert par.a == P(6, 6)
    assert par.b == P(4, 2)
    assert contains(par, P(5, 4))
    assert not contains(par, P(7, 5))


def test_parallelogram_rejects_shared_diagonal():
    with pytest.raises(DegenerateDiagonal):
        parallelogram(P(0, 0), P(3, 3))
    with pytest.raises(IdenticalCandidates):
        parallelogram(P(1, 1), P(1, 1))


@pytest.mark.parametrize("n", TRIPLES)
def test_inner_point_iff_bisectors_disjoint(n, rng):
    for cs in _random_generic_triples(rng, n):
        inner = triangle_containment(*cs)
        bisectors = build_bisectors(NormTag.L1, cs)
        disjoint = all(
            intersect(bisectors[e], bisectors[f]).kind is IntersectionKind.EMPTY
            for e, f in itertools.combinations(sorted(bisectors), 2)
        )
        assert (inner is not None) == disjoint


@pytest.mark.parametrize("triples,voters", [(10, 100), pytest.param(50, 200, marks=pytest.mark.slow)])
def test_inner_point_is_never_ranked_last(triples, voters, rng):
    checked = 0
    while checked < triples:
        (cs,) = _random_generic_triples(rng, 1)
        inner = triangle_containment(*cs)
        if inner is None:
            continue
        checked += 1
        for v in _sample_points(rng, voters, span=40):
            keys = [distance_key(NormTag.L1, v, c) for c in cs]
            if len(set(keys)) < 3:
                continue
            assert ranking_at(cs, NormTag.L1, v)[-1] != inner

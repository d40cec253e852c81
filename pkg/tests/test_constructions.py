import math
from fractions import Fraction

import pytest

from prefgeo.core.arrangement import enumerate_cells
from prefgeo.core.constructions import (
    hv_counts,
    l1_last_place_embedding,
    last_place_report_d,
    linf_last_place_embedding,
    ranking_at_d,
    theta_m4_embedding,
    verify_theta,
)
from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import TieError, UnsupportedNorm
from prefgeo.core.models import EmbeddingD, HVCounts, Point2, PointD, Profile
from prefgeo.core.profiles import check_last_place_bound, last_place_candidates, ranking_at


def test_theta_positions():
    assert theta_m4_embedding(2).positions == (Point2(0, 0), Point2(1, 2))
    assert theta_m4_embedding(3)[2] == Point2(5, 1)
    assert theta_m4_embedding(4)[3] == Point2(Fraction(5, 2), 12)
    with pytest.raises(ValueError):
        theta_m4_embedding(1)


@pytest.mark.parametrize("m,h,v", [(2, 1, 0), (3, 1, 2), (4, 4, 2), (6, 9, 6)])
def test_hv_counts(m, h, v):
    counts = hv_counts(m)
    assert counts == HVCounts(h, v)
    assert counts.h + counts.v == m * (m - 1) // 2


@pytest.mark.parametrize("m", range(2, 13))
def test_theta_orientations(m):
    report = verify_theta(theta_m4_embedding(m))
    assert report.passed
    assert report.to_dict()["misoriented"] == []


@pytest.mark.parametrize("m", [4, 6])
def test_theta_cell_lower_bound(m):
    cells = enumerate_cells(theta_m4_embedding(m), NormTag.L1)
    assert len(cells) >= hv_counts(m).cell_lower_bound


@pytest.mark.slow
def test_theta_growth_is_quartic():
    ms = [6, 8, 10, 12]
    counts = []
    for m in ms:
        n = len(enumerate_cells(theta_m4_embedding(m), NormTag.L1, workers=None))
        assert n >= hv_counts(m).cell_lower_bound
        counts.append(n)
    xs = [math.log(m) for m in ms]
    ys = [math.log(n) for n in counts]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    assert 3.3 <= slope <= 4.5


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_linf_last_place_is_tight(d):
    report = last_place_report_d(linf_last_place_embedding(d), NormTag.LINF)
    assert len(report.last_place) == 2 * d
    assert report.tight
    assert len(report.rankings) == 2 * d


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_l1_last_place_is_tight(d):
    emb = l1_last_place_embedding(d)
    report = last_place_report_d(emb, NormTag.L1)
    assert len(report.last_place) == 2 ** d
    assert report.tight
    # each voter sits opposite its own candidate
    for n, ranking in enumerate(report.rankings):
        assert ranking[-1] == n


def test_linf_voter_ranks_the_opposite_candidate_last():
    emb = linf_last_place_embedding(3)
    # voter 1 sits near +e_1, candidate 0 near -e_1
    assert ranking_at_d(emb, NormTag.LINF, emb.voters[1])[-1] == 0


def test_d_dimensional_ranking_matches_planar_ranking(rng):
    for _ in range(100):
        cs = list({(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(4)})
        emb = EmbeddingD(2, tuple(PointD.of(c) for c in cs))
        v = (rng.randint(-12, 12), rng.randint(-12, 12))
        for norm in (NormTag.L1, NormTag.LINF):
            try:
                expected = ranking_at([Point2.of(c) for c in cs], norm, Point2.of(v))
            except TieError:
                with pytest.raises(TieError):
                    ranking_at_d(emb, norm, PointD.of(v))
                continue
            assert ranking_at_d(emb, norm, PointD.of(v)) == expected


def test_d_dimensional_ranking_rejects_l2():
    with pytest.raises(UnsupportedNorm):
        ranking_at_d(l1_last_place_embedding(2), NormTag.L2, PointD.of((0, 0)))


def test_last_place_never_exceeds_the_bound(rng):
    for _ in range(100):
        d = rng.randint(1, 3)
        m = rng.randint(2, 10)
        cs = list({tuple(rng.randint(-6, 6) for _ in range(d)) for _ in range(m)})
        emb = EmbeddingD(d, tuple(PointD.of(c) for c in cs))
        for norm in (NormTag.L1, NormTag.LINF):
            rankings = set()
            for _ in range(50):
                v = PointD.of(tuple(rng.randint(-9, 9) for _ in range(d)))
                try:
                    rankings.add(ranking_at_d(emb, norm, v))
                except TieError:
                    continue
            prof = Profile(len(cs), frozenset(rankings))
            report = check_last_place_bound(prof, norm, d)
            assert report.passed
            assert report.last_place == last_place_candidates(prof)

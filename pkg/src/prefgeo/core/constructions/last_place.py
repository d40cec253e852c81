"""d-dimensional rankings and the families that put every candidate last.

Under linf in R^d at most 2d candidates can be ranked last by some voter,
and under l1 at most 2^d. The two embeddings here reach those bounds:
candidates on the coordinate axes (linf) or on the hypercube vertices (l1),
each ranked last by the voter sitting opposite it. Small exact offsets
remove every tie while keeping the opposite candidate strictly last.
"""
import itertools
import logging
from fractions import Fraction

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import TieError, UnsupportedNorm
from prefgeo.core.models.point import PointD
from prefgeo.core.models.profile import EmbeddingD, Profile, Ranking
from prefgeo.core.models.report import LastPlaceReport
from prefgeo.core.profiles.ranking import check_last_place_bound, rank_by_keys


def distance_key_d(norm: NormTag, p: PointD, q: PointD) -> Fraction:
    diffs = [abs(a - b) for a, b in zip(p.coords, q.coords)]
    match NormTag(norm):
        case NormTag.L1:
            return sum(diffs, Fraction(0))
        case NormTag.LINF:
            return max(diffs, default=Fraction(0))
    raise UnsupportedNorm("d-dimensional rankings are only defined for l1 and linf")


def ranking_at_d(emb: EmbeddingD, norm: NormTag, p: PointD) -> Ranking:
    """Candidates of emb by increasing l1 or linf distance from p.

    Raises:
        UnsupportedNorm: For l2.
        TieError: If p is equidistant from two candidates.
    """
    p = PointD.of(p)
    return rank_by_keys([distance_key_d(norm, p, c) for c in emb.candidates])


def linf_last_place_embedding(d: int) -> EmbeddingD:
    """2d candidates at -(1 + e_i) and +(1 + e_i) on each axis i, with a voter beside each.

    e_i = 1/(100(i + 3)) separates the axes. Voters sit at the unshifted
    unit positions plus a common offset 1/(10^5 (k + 1)) on coordinate k.
    """
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    candidates, voters = [], []
    eta = PointD(tuple(Fraction(1, 10**5 * (k + 1)) for k in range(d)))
    for i in range(1, d + 1):
        stretch = 1 + Fraction(1, 100 * (i + 3))
        candidates.append(PointD.unit(d, i - 1, -stretch))
        candidates.append(PointD.unit(d, i - 1, stretch))
        voters.append(PointD.unit(d, i - 1, -1) + eta)
        voters.append(PointD.unit(d, i - 1, 1) + eta)
    return EmbeddingD(d, tuple(candidates), tuple(voters))


def l1_last_place_embedding(d: int) -> EmbeddingD:
    """2^d candidates near the hypercube vertices u, with voters at -u.

    Candidate number n gets offset 10^-(n*d + k + 2) on coordinate k, so all
    offsets are distinct powers of ten and no two signed sums coincide.
    """
    if d < 1:
        raise ValueError(f"dimension must be at least 1, got {d}")
    candidates, voters = [], []
    for n, u in enumerate(itertools.product((-1, 1), repeat=d)):
        candidates.append(PointD(tuple(u[k] + Fraction(1, 10 ** (n * d + k + 2)) for k in range(d))))
        voters.append(PointD(tuple(-x for x in u)))
    return EmbeddingD(d, tuple(candidates), tuple(voters))


def last_place_report_d(emb: EmbeddingD, norm: NormTag) -> LastPlaceReport:
    """Rank every voter of emb and compare the last-placed set with the bound for R^d.

    Raises:
        UnsupportedNorm: For l2.
        TieError: With the voter index when a voter is equidistant from two candidates.
    """
    norm = NormTag(norm)
    rankings = []
    for vi, v in enumerate(emb.voters):
        try:
            rankings.append(ranking_at_d(emb, norm, v))
        except TieError as e:
            raise TieError(e.pair, voter=vi) from e
    base = check_last_place_bound(Profile(emb.m, frozenset(rankings)), norm, emb.d)
    report = LastPlaceReport(norm, emb.d, base.last_place, base.bound, tuple(rankings))
    logging.info(f"{norm.value} d={emb.d}: {len(report.last_place)} of {report.bound} last-placed")
    return report

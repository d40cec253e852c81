"""Rankings induced by embeddings, and simple profile statistics."""
import logging
from collections import Counter
from typing import Iterable, Sequence

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import TieError, UnsupportedNorm
from prefgeo.core.geometry.distance import distance_key
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2, Profile, Ranking
from prefgeo.core.models.report import LastPlaceReport


def rank_by_keys(keys: Sequence) -> Ranking:
    """Indices sorted by increasing key; raises TieError on equal keys."""
    order = sorted(range(len(keys)), key=lambda i: (keys[i], i))
    for a, b in zip(order, order[1:]):
        if keys[a] == keys[b]:
            raise TieError((min(a, b), max(a, b)))
    return tuple(order)


def ranking_at(emb: Embedding2 | Sequence[Point2], norm: NormTag, p: Point2) -> Ranking:
    """The strict ranking of a voter at p.

    Args:
        emb: Candidate positions.
        norm: L1, L2 or LINF.
        p: Voter position.

    Returns:
        Ranking: Candidate indices by strictly increasing distance from p.

    Raises:
        TieError: If p is equidistant from two candidates.

    Examples:
        >>> l1_maximal = Embedding2.of([(0, 8), (10, 10), (4, 1), (8, 3)])
        >>> ranking_at(l1_maximal, NormTag.L1, Point2("11/2", 8))
        (0, 1, 3, 2)
    """
    p = Point2.of(p)
    return rank_by_keys([distance_key(norm, p, c) for c in emb])


def profile_of(emb: Embedding2, norm: NormTag, voters: Iterable) -> Profile:
    """Deduplicated profile of the voters' rankings.

    Raises:
        TieError: With the index of the first voter lying on a bisector.
    """
    rankings = set()
    for vi, v in enumerate(voters):
        try:
            rankings.add(ranking_at(emb, norm, Point2.of(v)))
        except TieError as e:
            raise TieError(e.pair, voter=vi) from e
    return Profile(len(emb), frozenset(rankings))


def last_place_candidates(prof: Profile) -> frozenset[int]:
    """Candidates ranked last by at least one ranking."""
    return frozenset(r[-1] for r in prof.rankings)


def first_place_census(prof: Profile) -> tuple[int, ...]:
    """How many rankings put each candidate first."""
    counts = Counter(r[0] for r in prof.rankings)
    return tuple(counts.get(i, 0) for i in range(prof.m))


def reverse_profile(prof: Profile) -> Profile:
    """The opposite profile: every ranking read worst-first."""
    return Profile(prof.m, frozenset(tuple(reversed(r)) for r in prof.rankings))


def last_place_bound(norm: NormTag, d: int) -> int:
    """2^d under l1, 2d under linf."""
    match NormTag(norm):
        case NormTag.L1:
            return 2 ** d
        case NormTag.LINF:
            return 2 * d
    raise UnsupportedNorm("no last-place bound is known under l2")


def check_last_place_bound(prof: Profile, norm: NormTag, d: int) -> LastPlaceReport:
    """Compare the number of last-ranked candidates with the l1/linf bound in R^d.

    A failing report certifies that the profile is not Euclidean in R^d
    under that norm.

    Raises:
        UnsupportedNorm: For l2.
    """
    norm = NormTag(norm)
    report = LastPlaceReport(norm, d, last_place_candidates(prof), last_place_bound(norm, d))
    if not report.passed:
        logging.info(f"last-place bound violated: {len(report.last_place)} > {report.bound}")
    return report

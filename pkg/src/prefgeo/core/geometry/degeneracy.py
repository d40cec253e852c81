"""Degeneracy detection and genericity repair.

An embedding is generic when no pair has dx == dy, dx == 0 or dy == 0, no
two bisectors overlap along a positive length, no point lies on four or
more bisectors and no supplied voter ties. Under l2 only the last three
conditions matter; under linf the coordinate conditions are checked after
unrotating.

perturb_generic repairs one offending item per round by nudging a single
coordinate of the lowest-index candidate involved, by half the smallest
positive gap among all coordinate differences and voter distance gaps, and
re-checks until the report is empty.
"""
import itertools
import logging
from fractions import Fraction
from typing import Iterable, Sequence

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import DegenerateEmbedding, DuplicateCandidates, NoStrictGap
from prefgeo.core.geometry.distance import distance_key, rotate45, unrotate45
from prefgeo.core.geometry.intersect import build_bisectors, pairwise_vertices
from prefgeo.core.models.point import Point2
from prefgeo.core.models.report import DegeneracyReport, FatPoint, VoterTie
from prefgeo.core.utils.rational import sign

MAX_ROUNDS = 256
MAX_HALVINGS = 64


def _check_distinct(positions: Sequence[Point2]):
    seen: dict[Point2, int] = {}
    for i, p in enumerate(positions):
        if p in seen:
            raise DuplicateCandidates(f"candidates {seen[p]} and {i} share position {p}")
        seen[p] = i


def detect_degeneracies(
    positions: Iterable,
    voters: Iterable | None = None,
    norm: NormTag = NormTag.L1,
) -> DegeneracyReport:
    """Report every degeneracy of an embedding.

    Args:
        positions: Candidate positions (index = candidate id).
        voters: Optional voter positions checked for ties.
        norm: Norm whose bisectors are examined (default l1).

    Returns:
        DegeneracyReport: Empty exactly when the embedding is generic.

    Raises:
        DuplicateCandidates: If two positions coincide.

    Examples:
        >>> detect_degeneracies([(0, 8), (10, 10), (4, 1), (8, 3)]).is_empty()
        True
    """
    norm = NormTag(norm)
    positions = [Point2.of(p) for p in positions]
    voters = [Point2.of(v) for v in voters or ()]
    _check_distinct(positions)

    if norm is NormTag.LINF:
        inner = detect_degeneracies(
            [unrotate45(p) for p in positions], [unrotate45(v) for v in voters], NormTag.L1
        )
        return DegeneracyReport(
            norm=NormTag.LINF,
            square_pairs=inner.square_pairs,
            axis_pairs=inner.axis_pairs,
            infinite_pairs=inner.infinite_pairs,
            fat_points=tuple(FatPoint(rotate45(f.point), f.pairs) for f in inner.fat_points),
            voter_ties=tuple(VoterTie(t.voter, rotate45(t.point), t.pair) for t in inner.voter_ties),
        )

    square, axis = set(), set()
    if norm is NormTag.L1:
        for i, j in itertools.combinations(range(len(positions)), 2):
            dx = abs(positions[i].x - positions[j].x)
            dy = abs(positions[i].y - positions[j].y)
            if dx == 0 or dy == 0:
                axis.add((i, j))
            elif dx == dy:
                square.add((i, j))

    vertices, infinite = pairwise_vertices(build_bisectors(norm, positions))
    fat = tuple(
        FatPoint(p, tuple(sorted(pairs)))
        for p, pairs in sorted(vertices.items())
        if len(pairs) >= 4
    )

    ties = []
    for vi, v in enumerate(voters):
        keys = [distance_key(norm, v, c) for c in positions]
        for i, j in itertools.combinations(range(len(positions)), 2):
            if keys[i] == keys[j]:
                ties.append(VoterTie(vi, v, (i, j)))

    report = DegeneracyReport(
        norm=norm,
        square_pairs=frozenset(square),
        axis_pairs=frozenset(axis),
        infinite_pairs=frozenset(infinite),
        fat_points=fat,
        voter_ties=tuple(ties),
    )
    logging.debug(
        f"degeneracies ({norm.value}): {len(square)} square, {len(axis)} axis, "
        f"{len(infinite)} infinite, {len(fat)} fat, {len(ties)} voter ties"
    )
    return report


def _budget(positions: Sequence[Point2], voters: Sequence[Point2], norm: NormTag) -> Fraction:
    """Half the smallest positive gap among coordinate differences and voter distance gaps."""
    gaps = []
    for p, q in itertools.combinations(positions, 2):
        dx, dy = abs(p.x - q.x), abs(p.y - q.y)
        gaps.extend((dx, dy, abs(dx - dy)))
    for v in voters:
        keys = [distance_key(norm, v, c) for c in positions]
        gaps.extend(abs(a - b) for a, b in itertools.combinations(keys, 2))
    positive = [g for g in gaps if g > 0]
    return min(positive) / 2 if positive else Fraction(1)


def _pick_nudge(report: DegeneracyReport, positions: Sequence[Point2]) -> tuple[int, str]:
    """Lowest-index candidate of the first offending item, and the coordinate to move."""
    if report.square_pairs:
        i, _ = min(report.square_pairs)
        return i, "x"
    if report.axis_pairs:
        i, j = min(report.axis_pairs)
        return i, "y" if positions[i].y == positions[j].y else "x"
    if report.infinite_pairs:
        e, f = min(report.infinite_pairs)
        return min(e + f), "x"
    if report.fat_points:
        return min(i for pair in report.fat_points[0].pairs for i in pair), "x"
    tie = report.voter_ties[0]
    return tie.pair[0], "x"


def _orders(positions: Sequence[Point2], voters: Sequence[Point2], norm: NormTag) -> dict:
    out = {}
    for vi, v in enumerate(voters):
        keys = [distance_key(norm, v, c) for c in positions]
        for i, j in itertools.combinations(range(len(positions)), 2):
            out[(vi, i, j)] = sign(keys[j] - keys[i])
    return out


def _preserves(strict: dict, positions, voters, norm) -> bool:
    now = _orders(positions, voters, norm)
    return all(now[k] == s for k, s in strict.items())


def perturb_generic(
    positions: Iterable,
    voters: Iterable | None = None,
    norm: NormTag = NormTag.L1,
    max_rounds: int = MAX_ROUNDS,
) -> tuple[Point2, ...]:
    """Move candidates by tiny exact amounts until the embedding is generic.

    Args:
        positions: Candidate positions.
        voters: Optional voters whose strict comparisons must survive.
        norm: Norm under which genericity is required (default l1).
        max_rounds: Upper bound on repair rounds.

    Returns:
        tuple[Point2, ...]: Positions with an empty DegeneracyReport. Already
        generic input is returned unchanged.

    Raises:
        DuplicateCandidates: If two positions coincide.
        NoStrictGap: If a voter is equidistant from every candidate.
        DegenerateEmbedding: If the repair does not converge within max_rounds.
    """
    norm = NormTag(norm)
    positions = [Point2.of(p) for p in positions]
    voters = [Point2.of(v) for v in voters or ()]
    _check_distinct(positions)

    if norm is NormTag.LINF:
        fixed = perturb_generic(
            [unrotate45(p) for p in positions], [unrotate45(v) for v in voters], NormTag.L1, max_rounds
        )
        return tuple(rotate45(p) for p in fixed)

    for vi, v in enumerate(voters):
        if len(positions) >= 2 and len({distance_key(norm, v, c) for c in positions}) == 1:
            raise NoStrictGap(f"voter {vi} at {v} is equidistant from every candidate")

    strict = {k: s for k, s in _orders(positions, voters, norm).items() if s != 0}

    for round_no in range(max_rounds):
        report = detect_degeneracies(positions, voters, norm)
        if report.is_empty():
            if round_no:
                logging.info(f"embedding made generic after {round_no} nudges")
            return tuple(positions)

        index, axis = _pick_nudge(report, positions)
        eps = _budget(positions, voters, norm)
        for _ in range(MAX_HALVINGS):
            shift = Point2(eps, 0) if axis == "x" else Point2(0, eps)
            moved = positions[:index] + [positions[index] + shift] + positions[index + 1:]
            if moved[index] not in positions and _preserves(strict, moved, voters, norm):
                break
            logging.warning(f"nudge of candidate {index} by {eps} flips a voter, halving")
            eps /= 2
        else:
            raise DegenerateEmbedding(f"could not nudge candidate {index} safely", report)

        logging.debug(f"nudged candidate {index} along {axis} by {eps}")
        positions = moved

    raise DegenerateEmbedding(
        f"embedding still degenerate after {max_rounds} nudges",
        detect_degeneracies(positions, voters, norm),
    )

"""Profile isomorphism and the 4-candidate l2 recognizer.

A 4-candidate profile is l2-Euclidean in the plane exactly when some
renaming of its candidates turns it into a subset of P1, P2 or P3.
The search is brute force over all m! renamings, which is instant for m = 4
and refused above m = 8.
"""
import logging
from itertools import permutations
from typing import Iterable

from prefgeo.core.exceptions import ComplexityGuard, SizeMismatch, WrongArity
from prefgeo.core.models.profile import Profile, Ranking
from prefgeo.core.models.report import L2Verdict
from prefgeo.core.profiles.canonical import CANONICAL

MAX_BRUTE_FORCE_M = 8


def inverse(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of a permutation given as a tuple of images."""
    rv = [-1] * len(sigma)
    for i, v in enumerate(sigma):
        rv[v] = i
    return tuple(rv)


def rename(ranking: Ranking, sigma: tuple[int, ...]) -> Ranking:
    return tuple(sigma[c] for c in ranking)


def apply_permutation(prof: Profile, sigma: Iterable[int]) -> Profile:
    """Rename candidate i to sigma[i] in every ranking."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(prof.m)):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{prof.m - 1}")
    return Profile(prof.m, frozenset(rename(r, sigma) for r in prof.rankings))


def find_isomorphic_subprofile(p: Profile, q: Profile) -> tuple[int, ...] | None:
    """Find a renaming sigma with sigma(p) a subset of q.

    Args:
        p: Profile to embed.
        q: Host profile.

    Returns:
        The first sigma in lexicographic order (identity first), or None.

    Raises:
        SizeMismatch: If p and q range over different candidate counts.
        ComplexityGuard: If m > 8.
    """
    if p.m != q.m:
        raise SizeMismatch(f"profiles over {p.m} and {q.m} candidates")
    if p.m > MAX_BRUTE_FORCE_M:
        raise ComplexityGuard(f"refusing {p.m}! permutations (limit m <= {MAX_BRUTE_FORCE_M})")
    if len(p) > len(q):
        return None

    host = q.rankings
    rankings = sorted(p.rankings)
    for sigma in permutations(range(p.m)):
        if all(rename(r, sigma) in host for r in rankings):
            return sigma
    return None


def recognize_l2_four(prof: Profile) -> L2Verdict:
    """Decide whether a 4-candidate profile is l2-Euclidean in the plane.

    Raises:
        WrongArity: If prof.m != 4.

    Examples:
        >>> recognize_l2_four(CANONICAL.p3)
        L2Verdict(euclidean=True, witness='P3', permutation=(0, 1, 2, 3))
    """
    if prof.m != 4:
        raise WrongArity(f"recognition is defined for 4 candidates, got {prof.m}")
    for name, host in CANONICAL.l2_maximal().items():
        sigma = find_isomorphic_subprofile(prof, host)
        if sigma is not None:
            logging.debug(f"profile of size {len(prof)} embeds into {name} via {sigma}")
            return L2Verdict(True, name, sigma)
    return L2Verdict(False)

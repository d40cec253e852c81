"""Random search for embeddings with many cells.

Samples random generic embeddings, enumerates their l1 cells and records
how often the 4-candidate maximum of 19 is reached and whether each
maximal profile is a renaming of P0.
"""
import logging
import random
from collections import Counter

from prefgeo.core.enums import NormTag
from prefgeo.core.geometry.degeneracy import perturb_generic
from prefgeo.core.models.profile import Embedding2, Profile
from prefgeo.core.arrangement.cells import enumerate_cells
from prefgeo.core.profiles.bounds import L1_LINF_MAX_M4
from prefgeo.core.profiles.canonical import CANONICAL
from prefgeo.core.profiles.recognition import find_isomorphic_subprofile


def random_generic_embedding(
    rng: random.Random,
    m: int,
    norm: NormTag = NormTag.L1,
    span: int = 20,
) -> Embedding2:
    """m distinct integer points in [0, span]^2, nudged until generic under norm."""
    points: list[tuple[int, int]] = []
    while len(points) < m:
        p = (rng.randint(0, span), rng.randint(0, span))
        if p not in points:
            points.append(p)
    return Embedding2(perturb_generic(points, norm=norm))


def max_cell_search(m: int, trials: int, seed: int) -> dict:
    """Summary of `trials` random l1 embeddings on m candidates, reproducible from seed."""
    rng = random.Random(seed)
    histogram: Counter[int] = Counter()
    hits, isomorphic = 0, 0
    for trial in range(trials):
        emb = random_generic_embedding(rng, m)
        cells = enumerate_cells(emb, NormTag.L1)
        count = len(cells)
        histogram[count] += 1
        if m == 4 and count == L1_LINF_MAX_M4:
            hits += 1
            prof = Profile(m, frozenset(c.ranking for c in cells))
            if find_isomorphic_subprofile(prof, CANONICAL.p0) is not None:
                isomorphic += 1
            else:
                logging.warning(f"19-cell profile not isomorphic to P0: {[p.to_list() for p in emb]}")
        logging.info(f"trial {trial + 1}/{trials}: {count} cells")

    return {
        "m": m,
        "trials": trials,
        "seed": seed,
        "max_cells": max(histogram) if histogram else None,
        "histogram": {str(k): histogram[k] for k in sorted(histogram)},
        "hits_19": hits,
        "hits_19_isomorphic_to_p0": isomorphic,
    }

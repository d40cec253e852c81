"""Planar bisector geometry under l1, l2 and linf."""

from prefgeo.core.geometry.distance import distance_key, rotate45, side, unrotate45
from prefgeo.core.geometry.bisector import (
    bisector_kind,
    build_bisector,
    classify_bisector_l1,
    on_bisector,
    on_bisector_of,
)
from prefgeo.core.geometry.intersect import (
    build_bisectors,
    intersect,
    intersect_pieces,
    pairwise_vertices,
    triple_intersection,
)
from prefgeo.core.geometry.parallelogram import contains, parallelogram, triangle_containment
from prefgeo.core.geometry.degeneracy import detect_degeneracies, perturb_generic

__all__ = [
    "distance_key", "rotate45", "side", "unrotate45",
    "bisector_kind", "build_bisector", "classify_bisector_l1", "on_bisector", "on_bisector_of",
    "build_bisectors", "intersect", "intersect_pieces", "pairwise_vertices", "triple_intersection",
    "contains", "parallelogram", "triangle_containment",
    "detect_degeneracies", "perturb_generic",
]

"""Extremal constructions: the m^4 planar family, the last-place families in R^d, and rotate45."""

from prefgeo.core.geometry.distance import rotate45
from prefgeo.core.constructions.theta import hv_counts, theta_m4_embedding, verify_theta
from prefgeo.core.constructions.last_place import (
    distance_key_d,
    l1_last_place_embedding,
    last_place_report_d,
    linf_last_place_embedding,
    ranking_at_d,
)

__all__ = [
    "rotate45",
    "hv_counts", "theta_m4_embedding", "verify_theta",
    "distance_key_d", "l1_last_place_embedding", "last_place_report_d",
    "linf_last_place_embedding", "ranking_at_d",
]

"""Profiles: rankings from embeddings, canonical maximal profiles, recognition and size bounds."""

from prefgeo.core.profiles.ranking import (
    check_last_place_bound,
    first_place_census,
    last_place_bound,
    last_place_candidates,
    profile_of,
    rank_by_keys,
    ranking_at,
    reverse_profile,
)
from prefgeo.core.profiles.canonical import CANONICAL, MIXED_PROFILE, CanonicalProfiles
from prefgeo.core.profiles.recognition import (
    apply_permutation,
    find_isomorphic_subprofile,
    inverse,
    recognize_l2_four,
)
from prefgeo.core.profiles.bounds import (
    bennett_max_size,
    l2_planar_max_size,
    size_bound_report,
    stirling_first_unsigned,
)

__all__ = [
    "check_last_place_bound", "first_place_census", "last_place_bound", "last_place_candidates",
    "profile_of", "rank_by_keys", "ranking_at", "reverse_profile",
    "CANONICAL", "MIXED_PROFILE", "CanonicalProfiles",
    "apply_permutation", "find_isomorphic_subprofile", "inverse", "recognize_l2_four",
    "bennett_max_size", "l2_planar_max_size", "size_bound_report", "stirling_first_unsigned",
]

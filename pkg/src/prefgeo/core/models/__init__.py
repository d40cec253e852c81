"""Data models: points, bisectors, profiles, embeddings and reports."""

from prefgeo.core.models.point import ORIGIN, Point2, PointD
from prefgeo.core.models.bisector import (
    Bisector,
    IntersectionResult,
    LineBisector,
    Parallelogram,
    Piece,
    PolyBisector,
    QuadrantBisector,
)
from prefgeo.core.models.profile import (
    Embedding2,
    EmbeddingD,
    HVCounts,
    Profile,
    Ranking,
    check_ranking,
    parse_ranking,
)
from prefgeo.core.models.report import (
    ArrangementGraph,
    Cell,
    CriticalSet,
    DegeneracyReport,
    EulerReport,
    FatPoint,
    L2Verdict,
    LastPlaceReport,
    Pair,
    SizeBoundReport,
    ThetaReport,
    VoterTie,
)

__all__ = [
    "ORIGIN", "Point2", "PointD",
    "Bisector", "IntersectionResult", "LineBisector", "Parallelogram", "Piece",
    "PolyBisector", "QuadrantBisector",
    "Embedding2", "EmbeddingD", "HVCounts", "Profile", "Ranking", "check_ranking", "parse_ranking",
    "ArrangementGraph", "Cell", "CriticalSet", "DegeneracyReport", "EulerReport", "FatPoint",
    "L2Verdict", "LastPlaceReport", "Pair", "SizeBoundReport", "ThetaReport", "VoterTie",
]

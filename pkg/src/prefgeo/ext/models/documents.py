"""JSON document shapes for profiles and embeddings.

Candidate indices are 0-based everywhere. Coordinates are integers or
"p/q" strings so that exact values survive the file boundary.
"""
from typing import NotRequired, TypedDict

from prefgeo.core.exceptions import MalformedDocument
from prefgeo.core.models.point import Point2, PointD
from prefgeo.core.models.profile import Embedding2, EmbeddingD, Profile
from prefgeo.core.utils.rational import to_rational


class ProfileDocument(TypedDict):
    """A profile on disk.

    Attributes:
        m: Number of candidates.
        rankings: 0-based rankings, best first.
    """
    m: int
    rankings: list[list[int]]


class EmbeddingDocument(TypedDict):
    """An embedding on disk.

    Attributes:
        dimension: Coordinates per point (2 for planar embeddings).
        positions: Candidate coordinates.
        voters: Optional voter coordinates in the same encoding.
    """
    dimension: int
    positions: list[list[int | str]]
    voters: NotRequired[list[list[int | str]]]


def _require(doc, key: str, kind: type):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedDocument(f"document is missing '{key}'")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise MalformedDocument(f"'{key}' must be {kind.__name__}")
    return value


def profile_from_document(doc: ProfileDocument) -> Profile:
    m = _require(doc, "m", int)
    rankings = _require(doc, "rankings", list)
    try:
        return Profile(m, frozenset(tuple(r) for r in rankings))
    except (TypeError, ValueError) as e:
        raise MalformedDocument(f"invalid profile: {e}") from e


def profile_to_document(prof: Profile) -> ProfileDocument:
    return ProfileDocument(m=prof.m, rankings=[list(r) for r in prof])


def _coords(rows, dimension: int, key: str) -> list[tuple]:
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != dimension:
            raise MalformedDocument(f"every entry of '{key}' must list {dimension} coordinates")
        try:
            out.append(tuple(to_rational(c) for c in row))
        except ValueError as e:
            raise MalformedDocument(str(e)) from e
    return out


def embedding_from_document(doc: EmbeddingDocument) -> tuple[Embedding2, tuple[Point2, ...]]:
    """Planar embedding and its (possibly empty) voters.

    Raises:
        MalformedDocument: On a wrong shape, a non-planar dimension or a bad coordinate.
        DuplicateCandidates: If two positions coincide.
    """
    dimension = _require(doc, "dimension", int)
    if dimension != 2:
        raise MalformedDocument(f"expected a planar embedding, got dimension {dimension}")
    positions = _coords(_require(doc, "positions", list), 2, "positions")
    voters = _coords(doc.get("voters", []), 2, "voters")
    return Embedding2.of(positions), tuple(Point2.of(v) for v in voters)


def embedding_d_from_document(doc: EmbeddingDocument) -> EmbeddingD:
    dimension = _require(doc, "dimension", int)
    if dimension < 1:
        raise MalformedDocument("dimension must be positive")
    positions = _coords(_require(doc, "positions", list), dimension, "positions")
    voters = _coords(doc.get("voters", []), dimension, "voters")
    return EmbeddingD(dimension, tuple(PointD(p) for p in positions), tuple(PointD(v) for v in voters))


def embedding_to_document(emb: Embedding2 | EmbeddingD, voters=()) -> EmbeddingDocument:
    """Encode a planar or d-dimensional embedding; EmbeddingD carries its own voters."""
    if isinstance(emb, EmbeddingD):
        doc = EmbeddingDocument(dimension=emb.d, positions=[c.to_list() for c in emb.candidates])
        voters = emb.voters
    else:
        doc = EmbeddingDocument(dimension=2, positions=[p.to_list() for p in emb.positions])
    if voters:
        doc["voters"] = [v.to_list() for v in voters]
    return doc

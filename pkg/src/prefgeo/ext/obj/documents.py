"""Profile and embedding file managers.

Both read and write the JSON layout of prefgeo.ext.models.documents with
the shared json helpers (UTF-8, 4-space indentation).
"""
import json
import pathlib

from prefgeo.core.exceptions import MalformedDocument
from prefgeo.core.models.point import Point2
from prefgeo.core.models.profile import Embedding2, EmbeddingD, Profile
from prefgeo.core.utils.json import load_json, save_json
from prefgeo.ext.models.documents import (
    embedding_d_from_document,
    embedding_from_document,
    embedding_to_document,
    profile_from_document,
    profile_to_document,
)


def _read(path) -> dict:
    try:
        return load_json(path)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"{path}: not valid JSON ({e.msg})") from e


class ProfileFile:
    """Manager for profile (.json) documents."""

    @classmethod
    def load(cls, path: str | pathlib.Path) -> Profile:
        return profile_from_document(_read(path))

    @classmethod
    def dump(cls, path: str | pathlib.Path, prof: Profile):
        save_json(path, profile_to_document(prof))


class EmbeddingFile:
    """Manager for embedding (.json) documents, planar or d-dimensional."""

    @classmethod
    def load(cls, path: str | pathlib.Path) -> tuple[Embedding2, tuple[Point2, ...]]:
        """Load a planar embedding and its voters."""
        return embedding_from_document(_read(path))

    @classmethod
    def load_d(cls, path: str | pathlib.Path) -> EmbeddingD:
        return embedding_d_from_document(_read(path))

    @classmethod
    def dump(cls, path: str | pathlib.Path, emb: Embedding2 | EmbeddingD, voters=()):
        save_json(path, embedding_to_document(emb, voters))

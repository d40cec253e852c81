import pytest

from prefgeo.core.exceptions import DuplicateCandidates, MalformedDocument
from prefgeo.core.models import Embedding2, Point2, Profile
from prefgeo.core.constructions import l1_last_place_embedding
from prefgeo.ext.models.documents import (
    embedding_from_document,
    embedding_to_document,
    profile_from_document,
    profile_to_document,
)
from prefgeo.ext.obj.documents import EmbeddingFile, ProfileFile


def test_profile_document_layout(mixed_profile):
    doc = profile_to_document(Profile.from_strings(4, ["4312", "1234"]))
    assert doc == {"m": 4, "rankings": [[0, 1, 2, 3], [3, 2, 0, 1]]}
    assert profile_from_document(profile_to_document(mixed_profile)) == mixed_profile


def test_embedding_document_keeps_exact_coordinates():
    emb = Embedding2.of([(0, "1/3"), ("-5/2", 7)])
    doc = embedding_to_document(emb, voters=[Point2("1/2", 0)])
    assert doc == {"dimension": 2, "positions": [[0, "1/3"], ["-5/2", 7]], "voters": [["1/2", 0]]}
    assert embedding_from_document(doc) == (emb, (Point2("1/2", 0),))


def test_files_round_trip(tmp_path, canonical, quadrilateral, mixed_voters):
    ProfileFile.dump(tmp_path / "p.json", canonical.p0)
    assert ProfileFile.load(tmp_path / "p.json") == canonical.p0

    EmbeddingFile.dump(tmp_path / "e.json", quadrilateral, mixed_voters)
    assert EmbeddingFile.load(tmp_path / "e.json") == (quadrilateral, tuple(mixed_voters))

    emb = l1_last_place_embedding(3)
    EmbeddingFile.dump(tmp_path / "d.json", emb)
    assert EmbeddingFile.load_d(tmp_path / "d.json") == emb


@pytest.mark.parametrize("doc", [
    {"rankings": [[0, 1]]},
    {"m": "4", "rankings": []},
    {"m": 2, "rankings": [[0, 0]]},
    {"m": 2, "rankings": "01"},
    [],
])
def test_malformed_profiles(doc):
    with pytest.raises(MalformedDocument):
        profile_from_document(doc)


@pytest.mark.parametrize("doc", [
    {"positions": [[0, 0]]},
    {"dimension": 3, "positions": [[0, 0, 0]]},
    {"dimension": 2, "positions": [[0, 0, 1]]},
    {"dimension": 2, "positions": [[0, 0.5]]},
    {"dimension": 2, "positions": [[0, "x"]]},
    {"dimension": 2, "positions": [[0, 0]], "voters": [[1]]},
])
def test_malformed_embeddings(doc):
    with pytest.raises(MalformedDocument):
        embedding_from_document(doc)


def test_duplicate_positions_are_rejected():
    with pytest.raises(DuplicateCandidates):
        embedding_from_document({"dimension": 2, "positions": [[1, 1], ["2/2", 1]]})


def test_invalid_json_is_malformed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(MalformedDocument):
        ProfileFile.load(path)

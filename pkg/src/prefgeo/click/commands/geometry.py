"""Geometry commands (bisector, degeneracies)."""

from prefgeo.click.commands.command_factory import create_command, get_config
from prefgeo.click.utils_echo import echo_json, echo_warning
from prefgeo.core.enums import BisectorKind, NormTag
from prefgeo.core.geometry.bisector import bisector_kind, build_bisector
from prefgeo.core.geometry.degeneracy import detect_degeneracies, perturb_generic
from prefgeo.core.models.bisector import Bisector, LineBisector, Piece, PolyBisector
from prefgeo.core.models.profile import Embedding2
from prefgeo.core.utils.rational import format_rational
from prefgeo.ext.models.documents import embedding_to_document
from prefgeo.ext.obj.documents import EmbeddingFile
from prefgeo.ext.svg import draw


def piece_to_dict(piece: Piece) -> dict:
    start, end = piece.endpoints()
    if piece.is_bounded:
        shape = "segment"
    elif piece.lo is None and piece.hi is None:
        shape = "line"
    else:
        shape = "ray"
    return {
        "shape": shape,
        "origin": piece.origin.to_list(),
        "direction": piece.direction.to_list(),
        "start": start.to_list() if start else None,
        "end": end.to_list() if end else None,
    }


def bisector_to_dict(norm: NormTag, b: Bisector, kind: BisectorKind) -> dict:
    out = {"norm": norm.value, "kind": kind.value if norm is not NormTag.L2 else "line"}
    match b:
        case LineBisector():
            out["line"] = b.describe()
            out["coefficients"] = [format_rational(v) for v in (b.a, b.b, b.c)]
        case PolyBisector():
            out["segment"] = [b.seg_lo.to_list(), b.seg_hi.to_list()]
    out["pieces"] = [piece_to_dict(p) for p in b.pieces()]
    if kind is BisectorKind.QUADRANT_DEGENERATE and norm is not NormTag.L2:
        out["warning"] = "quadrant-degenerate bisector: it contains two closed quadrants"
    return out


@create_command('bisector', 'Describe the bisector of two candidates')
def bisector(ctx, norm, c1, c2, svg):
    norm = NormTag(norm)
    b = build_bisector(norm, c1, c2)
    kind = bisector_kind(norm, c1, c2)
    if kind is BisectorKind.QUADRANT_DEGENERATE and norm is not NormTag.L2:
        echo_warning("quadrant-degenerate bisector")
    echo_json(bisector_to_dict(norm, b, kind))
    if svg:
        size = get_config(ctx)["svg"]["size"]
        draw([c1, c2], {(0, 1): b}, size=size).save(svg)


@create_command('degeneracies', 'Report why an embedding is not generic')
def degeneracies(ctx, norm, embedding, perturb):
    norm = NormTag(norm)
    emb, voters = EmbeddingFile.load(embedding)
    report = detect_degeneracies(emb.positions, voters, norm)
    out = {"report": report.to_dict()}
    if perturb:
        fixed = Embedding2(perturb_generic(emb.positions, voters, norm))
        out["perturbed"] = embedding_to_document(fixed, voters)
    echo_json(out)

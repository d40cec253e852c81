"""Construction command (construct)."""

import click

from prefgeo.click.commands.command_factory import create_command
from prefgeo.click.utils_echo import echo_json, echo_saved
from prefgeo.core.constructions import (
    l1_last_place_embedding,
    last_place_report_d,
    linf_last_place_embedding,
    theta_m4_embedding,
    verify_theta,
)
from prefgeo.core.enums import NormTag
from prefgeo.ext.models.documents import embedding_to_document
from prefgeo.ext.obj.documents import EmbeddingFile


def _build(family: str, m: int | None, d: int | None):
    """The embedding of a family and its check, run lazily."""
    match family:
        case 'theta-m4':
            if m is None:
                raise click.UsageError("theta-m4 needs --m")
            emb = theta_m4_embedding(m)
            return emb, lambda: verify_theta(emb)
        case 'linf-last':
            if d is None:
                raise click.UsageError("linf-last needs --d")
            emb = linf_last_place_embedding(d)
            return emb, lambda: last_place_report_d(emb, NormTag.LINF)
        case 'l1-last':
            if d is None:
                raise click.UsageError("l1-last needs --d")
            emb = l1_last_place_embedding(d)
            return emb, lambda: last_place_report_d(emb, NormTag.L1)
    raise click.UsageError(f"unknown family {family!r}")


@create_command('construct', 'Emit an extremal construction as an embedding document')
def construct(ctx, family, m, d, verify, out):
    emb, check = _build(family, m, d)
    doc = embedding_to_document(emb)
    report = check().to_dict() if verify else None

    if out:
        EmbeddingFile.dump(out, emb)
        echo_saved(f"{family} embedding", out)
        if report is not None:
            echo_json(report)
        return

    if report is None:
        echo_json(doc)
    else:
        echo_json({"embedding": doc, "verification": report})

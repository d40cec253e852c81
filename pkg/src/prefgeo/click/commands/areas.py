"""Cell enumeration command (areas)."""

import logging

from prefgeo.click.commands.command_factory import create_command, get_config
from prefgeo.click.utils_echo import echo_json
from prefgeo.core.arrangement import build_graph, enumerate_cells, euler_audit
from prefgeo.core.enums import NormTag
from prefgeo.core.geometry.degeneracy import perturb_generic
from prefgeo.core.geometry.intersect import build_bisectors
from prefgeo.core.models.profile import Embedding2, Profile
from prefgeo.core.profiles.bounds import size_bound_report
from prefgeo.ext.models.documents import embedding_to_document, profile_to_document
from prefgeo.ext.obj.documents import EmbeddingFile
from prefgeo.ext.svg import draw


@create_command('areas', 'Enumerate every ranking realized by an embedding')
def areas(ctx, norm, embedding, svg, graph, perturb, workers):
    """Enumerate the preference cells of an embedding, with one witness point each."""
    norm = NormTag(norm)
    config = get_config(ctx)
    if workers is None:
        workers = config["workers"]

    emb, voters = EmbeddingFile.load(embedding)
    out = {}
    if perturb:
        fixed = Embedding2(perturb_generic(emb.positions, voters, norm))
        if fixed != emb:
            logging.info("embedding repaired before enumeration")
        emb = fixed
        out["perturbed"] = embedding_to_document(emb, voters)

    if graph:
        g = build_graph(emb, norm, workers)
        cells = g.cells
        out["graph"] = g.to_dict()
        out["euler"] = euler_audit(g).to_dict()
    else:
        cells = enumerate_cells(emb, norm, workers)

    prof = Profile(emb.m, frozenset(c.ranking for c in cells))
    out = {
        "norm": norm.value,
        "count": len(prof),
        "profile": profile_to_document(prof),
        "cells": [c.to_dict() for c in sorted(cells)],
        "size_bound": size_bound_report(prof, norm).to_dict(),
    } | out
    echo_json(out)

    if svg:
        bisectors = build_bisectors(norm, emb.positions)
        draw(emb.positions, bisectors, cells, size=config["svg"]["size"]).save(svg)

"""Arrangement graph counts and the Euler-formula audit."""
import logging

from prefgeo.core.enums import IntersectionKind, NormTag
from prefgeo.core.exceptions import WrongArity
from prefgeo.core.geometry.intersect import build_bisectors, intersect
from prefgeo.core.models.profile import Embedding2
from prefgeo.core.models.report import ArrangementGraph, EulerReport
from prefgeo.core.arrangement.cells import arrangement_cells
from prefgeo.core.arrangement.critical import _critical_from, require_generic

# (vertex limit, cell limit) for four candidates
M4_LIMITS = {
    NormTag.L1: (8, 19),
    NormTag.LINF: (8, 19),
    NormTag.L2: (7, 18),
}

CROSS_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def build_graph(emb: Embedding2, norm: NormTag, workers: int | None = 1) -> ArrangementGraph:
    """Planar graph of the arrangement: vertices, edges between consecutive vertices, cells.

    An edge joins two vertices that are consecutive along one bisector, so a
    bisector holding k vertices contributes k - 1 edges. unbounded_cells is the
    number of times the bisectors cross a square enclosing every vertex.

    Raises:
        DegenerateEmbedding: If the embedding is not generic.
    """
    norm = NormTag(norm)
    require_generic(emb, norm)
    bisectors = build_bisectors(norm, emb.positions)
    critical = _critical_from(bisectors)
    cells, crossings = arrangement_cells(emb.positions, norm, bisectors, critical, workers)

    n_e = sum(max(0, len(pts) - 1) for pts in critical.traversals.values())
    g = ArrangementGraph(
        m=emb.m,
        norm=norm,
        n_v=len(critical.vertices),
        n_e=n_e,
        unbounded_cells=crossings,
        cells=cells,
        critical=critical,
    )
    logging.info(f"graph: n_v={g.n_v} n_e={g.n_e} unbounded={g.unbounded_cells} n_z={g.n_z}")
    return g


def euler_audit(g: ArrangementGraph) -> EulerReport:
    """Check n_z <= n_e - n_v + 1 + unbounded_cells, and the vertex/cell limits when m == 4.

    Examples:
        >>> from prefgeo.core.profiles.canonical import L1_MAXIMAL
        >>> euler_audit(build_graph(L1_MAXIMAL, NormTag.L1)).tight
        True
    """
    bound = g.n_e - g.n_v + 1 + g.unbounded_cells
    v_limit, z_limit = M4_LIMITS[g.norm] if g.m == 4 else (None, None)
    report = EulerReport(
        n_z=g.n_z,
        euler_bound=bound,
        m4_vertex_limit=v_limit,
        m4_cell_limit=z_limit,
        n_v=g.n_v,
    )
    if not report.passed:
        logging.warning(f"euler audit failed: {report.to_dict()}")
    return report


def single_double_crossing(emb: Embedding2, norm: NormTag = NormTag.L1) -> bool:
    """True when at most one pair of disjoint-candidate bisectors meets twice.

    Raises:
        WrongArity: Unless the embedding has exactly 4 candidates.
        DegenerateEmbedding: If the embedding is not generic.
    """
    if emb.m != 4:
        raise WrongArity(f"expected 4 candidates, got {emb.m}")
    norm = NormTag(norm)
    require_generic(emb, norm)
    bisectors = build_bisectors(norm, emb.positions)
    doubles = [
        (a, b) for a, b in CROSS_PAIRS
        if intersect(bisectors[a], bisectors[b]).kind is IntersectionKind.TWO
    ]
    logging.debug(f"doubly crossing bisector pairs: {doubles}")
    return len(doubles) <= 1

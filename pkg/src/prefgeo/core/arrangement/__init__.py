"""Exact cell enumeration and Euler counts of bisector arrangements."""

from prefgeo.core.arrangement.critical import arc_key, critical_points, incident_directions
from prefgeo.core.arrangement.cells import enumerate_cells, safe_step
from prefgeo.core.arrangement.graph import build_graph, euler_audit, single_double_crossing
from prefgeo.core.arrangement.search import max_cell_search, random_generic_embedding

__all__ = [
    "arc_key", "critical_points", "incident_directions",
    "enumerate_cells", "safe_step",
    "build_graph", "single_double_crossing", "euler_audit",
    "max_cell_search", "random_generic_embedding",
]

"""
Connectivity Oracles

Menger-style vertex connectivity by unit-capacity max flow on the
vertex-split network of the materialized graph. Each vertex w becomes an
arc (w, in) -> (w, out) of capacity 1; each undirected edge {a, b} becomes
arcs (a, out) -> (b, in) and (b, out) -> (a, in). The flow from (u, out)
to (v, in) counts internally disjoint uv-paths, a direct edge included.
"""

from functools import lru_cache
from typing import List, Tuple

import networkx as nx

from core.exceptions import IdenticalEndpointsError, TrivialGraphError
from core.export import build_graph
from core.simplex import GraphParams, Vertex
from observability.centralized_logger import get_logger
from observability.metrics import metrics

logger = get_logger(__name__)


@lru_cache(maxsize=16)
def _split_network(params: GraphParams) -> nx.DiGraph:
    """Vertex-split flow network of the instance. Treat as read-only."""
    graph = build_graph(params)
    network = nx.DiGraph()
    for vertex in graph.nodes:
        network.add_edge((vertex, "in"), (vertex, "out"), capacity=1)
    for a, b in graph.edges:
        network.add_edge((a, "out"), (b, "in"), capacity=1)
        network.add_edge((b, "out"), (a, "in"), capacity=1)
    return network


@lru_cache(maxsize=16)
def _vertex_order(params: GraphParams) -> Tuple[List[Vertex], nx.Graph]:
    graph = build_graph(params)
    return sorted(graph.nodes), graph


def max_disjoint_paths(params: GraphParams, u: Vertex, v: Vertex) -> int:
    """
    Maximum number of internally vertex-disjoint uv-paths.

    Raises:
        IdenticalEndpointsError: If u == v
    """
    if u == v:
        raise IdenticalEndpointsError(u)
    network = _split_network(params)
    return int(nx.maximum_flow_value(network, (u, "out"), (v, "in")))


def vertex_connectivity(params: GraphParams, exhaustive: bool = False) -> int:
    """
    Vertex connectivity of the instance.

    The default scans pairs anchored at the first kappa+1 vertices (Even's
    reduction: some anchor survives every minimum separator). With
    exhaustive=True every non-adjacent pair is tried. Complete graphs have
    no non-adjacent pair and fall back to the minimum over all pairs.

    Raises:
        TrivialGraphError: If the instance has fewer than 2 vertices
    """
    vertices, graph = _vertex_order(params)
    if len(vertices) < 2:
        raise TrivialGraphError()

    best = None
    with metrics.track_oracle("vertex_connectivity"):
        for i, anchor in enumerate(vertices):
            if not exhaustive and best is not None and i > best:
                break
            for other in vertices[i + 1:]:
                if graph.has_edge(anchor, other):
                    continue
                flow = max_disjoint_paths(params, anchor, other)
                if best is None or flow < best:
                    best = flow

        if best is None:
            logger.debug("Complete graph; using all-pairs minimum", params=str(params))
            best = min(
                max_disjoint_paths(params, a, b)
                for i, a in enumerate(vertices)
                for b in vertices[i + 1:]
            )
    return best

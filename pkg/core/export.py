"""
Graph Export

Materializes T_m^n as a networkx graph on demand and renders it as DOT,
a plain edge list, or JSON. Every undirected edge is written once with the
lexicographically smaller endpoint first, and edges are sorted, so output
diffs stay stable.
"""

import json
from typing import List, Tuple

import networkx as nx

from core.simplex import GraphParams, Vertex, enumerate_vertices, iter_neighbors


def build_graph(params: GraphParams) -> nx.Graph:
    """Materialize the instance as an undirected networkx graph keyed by Vertex."""
    graph = nx.Graph(n=params.n, m=params.m)
    for vertex in enumerate_vertices(params):
        graph.add_node(vertex)
        for neighbor in iter_neighbors(vertex):
            if vertex < neighbor:
                graph.add_edge(vertex, neighbor)
    return graph


def sorted_edges(params: GraphParams) -> List[Tuple[Vertex, Vertex]]:
    """Each edge once, smaller endpoint first, in lexicographic order."""
    return sorted(
        (min(a, b), max(a, b)) for a, b in build_graph(params).edges()
    )


def to_dot(params: GraphParams) -> str:
    """DOT text: graph T { "2,0,0" -- "1,1,0"; ... }."""
    lines = ["graph T {"]
    for vertex in enumerate_vertices(params):
        lines.append(f'  "{vertex}";')
    for a, b in sorted_edges(params):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines)


def to_edge_list(params: GraphParams) -> str:
    """One edge per line: "u v" in textual vertex form."""
    return "\n".join(f"{a} {b}" for a, b in sorted_edges(params))


def to_json(params: GraphParams) -> str:
    """JSON document with params, vertices and edges."""
    document = {
        "params": {"n": params.n, "m": params.m},
        "vertices": [str(vertex) for vertex in enumerate_vertices(params)],
        "edges": [[str(a), str(b)] for a, b in sorted_edges(params)],
    }
    return json.dumps(document, indent=2)

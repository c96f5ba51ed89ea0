"""Cached neighbor lists shared by the brute-force oracles."""

from functools import lru_cache
from typing import Dict, Tuple

from core.simplex import GraphParams, Vertex, enumerate_vertices, iter_neighbors


@lru_cache(maxsize=32)
def adjacency_lists(params: GraphParams) -> Dict[Vertex, Tuple[Vertex, ...]]:
    """Neighbors of every vertex, in iter_neighbors order. Treat as read-only."""
    return {
        vertex: tuple(iter_neighbors(vertex))
        for vertex in enumerate_vertices(params)
    }


def remaining_distance(x: Vertex, target: Vertex) -> int:
    """Unchecked h-distance for hot search loops."""
    return sum(abs(a - b) for a, b in zip(x.coords, target.coords)) // 2

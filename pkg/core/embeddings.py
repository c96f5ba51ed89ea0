"""
Mesh and Tripy Embeddings

The triangular mesh T_m and the L-level triangular pyramid (tripy) TP_L in
their native coordinates, their maps into integer simplices, and a verifier
that checks a supplied vertex map is a graph isomorphism.

sigma1: T_m -> T_m^2,  (x, y)      -> (m-(x+y), x, y)
sigma2: TP_L -> T_L^3, (k, (x, y)) -> (L-k, k-(x+y), x, y)

The published form of sigma2, (m-(k+x+y), k, x, y), leaves the simplex:
for L = 2 it sends (2, (1, 0)) to (-1, 2, 1, 0). sigma2_printed() keeps that
form available so the discrepancy stays reproducible.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, List, Mapping, Tuple, Union

from core.exceptions import InvalidVertexError, VertexFormatError
from core.simplex import (
    GraphParams,
    Vertex,
    enumerate_vertices,
    is_adjacent,
    make_vertex,
)


@dataclass(frozen=True, order=True)
class MeshVertex:
    """Vertex (x, y) of the triangular mesh, 0 <= x + y <= m."""

    x: int
    y: int

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


@dataclass(frozen=True, order=True)
class TripyVertex:
    """Vertex (k, (x, y)) of the tripy: level k, 0 <= x + y <= k."""

    k: int
    x: int
    y: int

    def __str__(self) -> str:
        return f"{self.k}:{self.x},{self.y}"


@dataclass(frozen=True)
class AdjacencyView:
    """A finite vertex set with an adjacency predicate."""

    vertices: Tuple[Hashable, ...]
    adjacent: Callable[[Hashable, Hashable], bool]


def make_mesh_vertex(x: int, y: int, m: int) -> MeshVertex:
    """Validate (x, y) against a mesh of side m."""
    if x < 0 or y < 0 or x + y > m:
        raise InvalidVertexError(f"Mesh vertex ({x},{y}) outside T_{m}", invariant="sum")
    return MeshVertex(x, y)


def make_tripy_vertex(k: int, x: int, y: int, levels: int) -> TripyVertex:
    """Validate (k, (x, y)) against a tripy with levels 0..L."""
    if not 0 <= k <= levels:
        raise InvalidVertexError(f"Tripy level {k} outside 0..{levels}", invariant="length")
    if x < 0 or y < 0 or x + y > k:
        raise InvalidVertexError(
            f"Tripy vertex ({k},({x},{y})) outside level {k}", invariant="sum"
        )
    return TripyVertex(k, x, y)


def parse_mesh_vertex(text: str, m: int) -> MeshVertex:
    """Parse the "x,y" format."""
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise VertexFormatError(text, expected="x,y")
    return make_mesh_vertex(x, y, m)


def parse_tripy_vertex(text: str, levels: int) -> TripyVertex:
    """Parse the "k:x,y" format."""
    try:
        level, rest = text.split(":")
        x, y = (int(part) for part in rest.split(","))
        k = int(level)
    except ValueError:
        raise VertexFormatError(text, expected="k:x,y")
    return make_tripy_vertex(k, x, y, levels)


def mesh_vertices(m: int) -> List[MeshVertex]:
    return [MeshVertex(x, y) for x in range(m + 1) for y in range(m + 1 - x)]


def tripy_vertices(levels: int) -> List[TripyVertex]:
    return [
        TripyVertex(k, x, y)
        for k in range(levels + 1)
        for x in range(k + 1)
        for y in range(k + 1 - x)
    ]


def mesh_adjacent(a: MeshVertex, b: MeshVertex) -> bool:
    """Unit step in x or y, or the anti-diagonal step (x+1, y-1) either way."""
    dx, dy = b.x - a.x, b.y - a.y
    if abs(dx) + abs(dy) == 1:
        return True
    return (dx, dy) in ((1, -1), (-1, 1))


def tripy_adjacent(a: TripyVertex, b: TripyVertex) -> bool:
    """Same-level mesh adjacency, or a parent/child link between levels k and k+1."""
    if a.k == b.k:
        return mesh_adjacent(MeshVertex(a.x, a.y), MeshVertex(b.x, b.y))
    if abs(a.k - b.k) != 1:
        return False
    parent, child = (a, b) if a.k < b.k else (b, a)
    return (child.x - parent.x, child.y - parent.y) in ((0, 0), (1, 0), (0, 1))


def sigma1(a: MeshVertex, m: int) -> Vertex:
    """Map a mesh vertex into T_m^2."""
    return make_vertex((m - (a.x + a.y), a.x, a.y), GraphParams(n=2, m=m))


def sigma2(a: TripyVertex, levels: int) -> Vertex:
    """Map a tripy vertex into T_L^3 (corrected form)."""
    return make_vertex(
        (levels - a.k, a.k - (a.x + a.y), a.x, a.y),
        GraphParams(n=3, m=levels)
    )


def sigma2_printed(a: TripyVertex, m: int) -> Tuple[int, int, int, int]:
    """The published sigma2 formula, unvalidated."""
    return (m - (a.k + a.x + a.y), a.k, a.x, a.y)


def mesh_view(m: int) -> AdjacencyView:
    return AdjacencyView(tuple(mesh_vertices(m)), mesh_adjacent)


def tripy_view(levels: int) -> AdjacencyView:
    return AdjacencyView(tuple(tripy_vertices(levels)), tripy_adjacent)


def simplex_view(params: GraphParams) -> AdjacencyView:
    return AdjacencyView(tuple(enumerate_vertices(params)), is_adjacent)


VertexMap = Union[Callable[[Hashable], Hashable], Mapping[Hashable, Hashable]]


def verify_isomorphism(
    vertex_map: VertexMap,
    graph_a: AdjacencyView,
    graph_b: AdjacencyView
) -> bool:
    """
    Check that a vertex map is an isomorphism from graph_a onto graph_b.

    The map must be a bijection onto graph_b's vertices and must preserve
    adjacency and non-adjacency for every pair. A map that raises on some
    vertex (e.g. produces an invalid image) is not an isomorphism.
    """
    if len(graph_a.vertices) != len(graph_b.vertices):
        return False

    lookup = vertex_map.__getitem__ if isinstance(vertex_map, Mapping) else vertex_map
    targets = set(graph_b.vertices)
    images = {}
    for vertex in graph_a.vertices:
        try:
            image = lookup(vertex)
        except (InvalidVertexError, KeyError):
            return False
        if image not in targets:
            return False
        images[vertex] = image
    if len(set(images.values())) != len(targets):
        return False

    for first, second in combinations(graph_a.vertices, 2):
        if graph_a.adjacent(first, second) != graph_b.adjacent(images[first], images[second]):
            return False
    return True

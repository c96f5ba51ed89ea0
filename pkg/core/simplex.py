"""
Integer Simplex Topology

Vertices, implicit adjacency and the h-metric of the integer simplex T_m^n.

A vertex is a nonnegative integer (n+1)-tuple summing to m. Coordinates are
printed and stored leftmost-first, and the leftmost coordinate is index n:
the tuple (3, 1, 0, 0) has v_3 = 3, v_2 = 1, v_1 = 0, v_0 = 0.
Two vertices are adjacent when one unit moves from one coordinate to another.

The graph is never materialized here; every operation works from coordinates.

Usage:
    from core.simplex import GraphParams, make_vertex, neighbors

    params = GraphParams(n=2, m=2)
    corner = make_vertex((2, 0, 0), params)
    neighbors(corner)  # {(1,1,0), (1,0,1)}
"""

from dataclasses import dataclass
from math import comb
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from core.exceptions import (
    InvalidParamsError,
    InvalidVertexError,
    ParamsMismatchError,
    VertexFormatError,
)


@dataclass(frozen=True, order=True)
class GraphParams:
    """Instance parameters of T_m^n: dimension n (n+1 coordinates) and side-length m."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParamsError(f"Dimension n must be >= 1, got {self.n}")
        if self.m < 1:
            raise InvalidParamsError(f"Side-length m must be >= 1, got {self.m}")

    @property
    def vertex_count(self) -> int:
        """Number of vertices, binomial(n+m, m)."""
        return comb(self.n + self.m, self.m)

    def __str__(self) -> str:
        return f"T_{self.m}^{self.n}"


@dataclass(frozen=True, order=True)
class Vertex:
    """
    A vertex of T_m^n.

    Ordering and hashing follow the coordinate tuple, so vertices sort
    lexicographically on (v_n, ..., v_0). Build validated vertices with
    make_vertex(); the constructor itself trusts its input.
    """

    coords: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def m(self) -> int:
        return sum(self.coords)

    @property
    def params(self) -> GraphParams:
        return GraphParams(n=self.n, m=self.m)

    def coord(self, index: int) -> int:
        """Coordinate v_index; index n is the leftmost entry."""
        return self.coords[self.n - index]

    def transfer(self, source: int, target: int) -> "Vertex":
        """Move one unit from coordinate `source` to coordinate `target`."""
        values = list(self.coords)
        values[self.n - source] -= 1
        values[self.n - target] += 1
        return Vertex(tuple(values))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"Vertex({self})"


@dataclass(frozen=True)
class PositionClassification:
    """Partition of the indices 0..n by comparing two vertices coordinate-wise."""

    down: FrozenSet[int]
    up: FrozenSet[int]
    equal: FrozenSet[int]

    @property
    def p(self) -> int:
        """Number of indices with u_i > v_i."""
        return len(self.down)

    @property
    def q(self) -> int:
        """Number of indices with u_i < v_i."""
        return len(self.up)


def make_vertex(coords: Sequence[int], params: GraphParams) -> Vertex:
    """
    Validate a coordinate sequence against an instance.

    Args:
        coords: n+1 integers, leftmost is index n
        params: Instance the vertex must belong to

    Returns:
        The validated Vertex

    Raises:
        InvalidVertexError: Naming the violated invariant (length, nonnegative, sum)
    """
    values = tuple(int(c) for c in coords)
    if len(values) != params.n + 1:
        raise InvalidVertexError(
            f"Vertex {values} has {len(values)} coordinates, expected {params.n + 1}",
            invariant="length"
        )
    if any(c < 0 for c in values):
        raise InvalidVertexError(
            f"Vertex {values} has a negative coordinate",
            invariant="nonnegative"
        )
    total = sum(values)
    if total != params.m:
        raise InvalidVertexError(
            f"Vertex {values} sums to {total} != {params.m}",
            invariant="sum"
        )
    return Vertex(values)


def parse_vertex(text: str, params: GraphParams) -> Vertex:
    """
    Parse the textual vertex format "2,0,0" against an instance.

    Raises:
        VertexFormatError: If the text is not comma-separated integers
        InvalidVertexError: If the parsed tuple is not a vertex of the instance
    """
    parts = [part.strip() for part in text.split(",")]
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise VertexFormatError(text)
    return make_vertex(values, params)


def _check_same_instance(u: Vertex, v: Vertex) -> None:
    if len(u.coords) != len(v.coords) or u.m != v.m:
        raise ParamsMismatchError(u, v)


def h_distance(u: Vertex, v: Vertex) -> int:
    """
    Half the coordinate-wise absolute difference sum.

    Equals the graph distance in T_m^n and never exceeds m.
    """
    _check_same_instance(u, v)
    return sum(abs(a - b) for a, b in zip(u.coords, v.coords)) // 2


def iter_neighbors(v: Vertex) -> Iterator[Vertex]:
    """Yield the neighbors of v in a fixed order (by source, then target index)."""
    n = v.n
    for source in range(n, -1, -1):
        if v.coords[n - source] == 0:
            continue
        for target in range(n, -1, -1):
            if target != source:
                yield v.transfer(source, target)


def neighbors(v: Vertex) -> FrozenSet[Vertex]:
    """All vertices one unit-transfer away from v; n per positive coordinate."""
    return frozenset(iter_neighbors(v))


def degree(v: Vertex) -> int:
    """Degree of v: n times the number of positive coordinates."""
    return v.n * sum(1 for c in v.coords if c > 0)


def is_adjacent(u: Vertex, v: Vertex) -> bool:
    """True iff u and v differ by one unit in exactly two places."""
    return h_distance(u, v) == 1


def enumerate_vertices(params: GraphParams) -> List[Vertex]:
    """
    Every vertex of the instance, lexicographic on (v_n, ..., v_0).

    The count is binomial(n+m, m).
    """
    result: List[Vertex] = []
    prefix: List[int] = []

    def extend(slots: int, remaining: int) -> None:
        if slots == 1:
            result.append(Vertex(tuple(prefix) + (remaining,)))
            return
        for value in range(remaining + 1):
            prefix.append(value)
            extend(slots - 1, remaining - value)
            prefix.pop()

    extend(params.n + 1, params.m)
    return result


def classify_positions(u: Vertex, v: Vertex) -> PositionClassification:
    """Split indices into down (u_i > v_i), up (u_i < v_i) and equal."""
    _check_same_instance(u, v)
    down, up, equal = set(), set(), set()
    for index in range(u.n + 1):
        a, b = u.coord(index), v.coord(index)
        if a > b:
            down.add(index)
        elif a < b:
            up.add(index)
        else:
            equal.add(index)
    return PositionClassification(frozenset(down), frozenset(up), frozenset(equal))


def corner(params: GraphParams, index: int) -> Vertex:
    """The vertex with m at coordinate `index` and 0 elsewhere (m0^n is index n)."""
    if not 0 <= index <= params.n:
        raise InvalidVertexError(
            f"Corner index {index} outside 0..{params.n}", invariant="length"
        )
    values = [0] * (params.n + 1)
    values[params.n - index] = params.m
    return Vertex(tuple(values))


def minimum_degree(params: GraphParams) -> int:
    """Minimum degree over all vertices, by enumeration."""
    return min(degree(v) for v in enumerate_vertices(params))

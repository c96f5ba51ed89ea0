"""
Distance Oracles

Breadth-first search over the implicit adjacency of T_m^n with optional
vertex faults: pairwise distances, exact diameters, and shortest-path
counting on the BFS predecessor DAG.

Disconnection is reported with the INFINITY marker, never raised.
"""

import math
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from core.exceptions import (
    FaultyEndpointError,
    ParamsMismatchError,
    TrivialGraphError,
)
from core.simplex import GraphParams, Vertex, enumerate_vertices, h_distance
from observability.centralized_logger import get_logger
from observability.metrics import metrics
from oracles.adjacency import adjacency_lists

logger = get_logger(__name__)

INFINITY = math.inf

Distance = Union[int, float]


def format_value(value: Distance) -> Union[int, str]:
    """JSON form of a distance: the integer, or "inf" when unreachable."""
    return "inf" if value == INFINITY else int(value)


def _check_member(params: GraphParams, vertex: Vertex) -> None:
    if vertex.n != params.n or vertex.m != params.m:
        raise ParamsMismatchError(params, vertex)


@dataclass(frozen=True)
class FaultSet:
    """Vertices removed from the instance."""

    vertices: FrozenSet[Vertex] = frozenset()

    @classmethod
    def of(cls, params: GraphParams, vertices: Iterable[Vertex] = ()) -> "FaultSet":
        """Build a fault set, checking every member belongs to the instance."""
        members = frozenset(vertices)
        for vertex in members:
            _check_member(params, vertex)
        return cls(members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))

    def to_list(self) -> List[str]:
        return [str(vertex) for vertex in sorted(self.vertices)]


@dataclass
class DiameterReport:
    """Outcome of a diameter-type oracle with the pair (and faults) attaining it."""

    quantity: str
    value: Distance
    witness_pair: Tuple[Vertex, Vertex]
    witness_faults: FaultSet = field(default_factory=FaultSet)
    omega: Optional[int] = None

    @property
    def connected(self) -> bool:
        return self.value != INFINITY

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to the report JSON schema."""
        result: Dict[str, Any] = {"quantity": self.quantity}
        if self.omega is not None:
            result["omega"] = self.omega
        result["value"] = format_value(self.value)
        result["witness_pair"] = [str(self.witness_pair[0]), str(self.witness_pair[1])]
        result["witness_faults"] = self.witness_faults.to_list()
        return result


def _bfs(
    adjacency: Dict[Vertex, Tuple[Vertex, ...]],
    source: Vertex,
    blocked: FrozenSet[Vertex],
    stop: Optional[Vertex] = None
) -> Dict[Vertex, int]:
    """Distances from source to every reachable unblocked vertex."""
    distances = {source: 0}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == stop:
            break
        step = distances[current] + 1
        for neighbor in adjacency[current]:
            if neighbor not in distances and neighbor not in blocked:
                distances[neighbor] = step
                queue.append(neighbor)
    return distances


def _bfs_counts(
    adjacency: Dict[Vertex, Tuple[Vertex, ...]],
    source: Vertex,
    blocked: FrozenSet[Vertex]
) -> Tuple[Dict[Vertex, int], Dict[Vertex, int]]:
    """Distances and shortest-path counts from source (predecessor DAG sums)."""
    distances = {source: 0}
    counts = {source: 1}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        step = distances[current] + 1
        for neighbor in adjacency[current]:
            if neighbor in blocked:
                continue
            if neighbor not in distances:
                distances[neighbor] = step
                counts[neighbor] = counts[current]
                queue.append(neighbor)
            elif distances[neighbor] == step:
                counts[neighbor] += counts[current]
    return distances, counts


def bfs_distance(
    params: GraphParams,
    u: Vertex,
    v: Vertex,
    faults: Optional[FaultSet] = None
) -> Distance:
    """
    Exact shortest-path length in T_m^n minus faults.

    Returns:
        The distance, or INFINITY if v is unreachable

    Raises:
        FaultyEndpointError: If u or v is faulty
    """
    faults = faults or FaultSet()
    for endpoint in (u, v):
        _check_member(params, endpoint)
        if endpoint in faults:
            raise FaultyEndpointError(endpoint)
    if u == v:
        return 0
    distances = _bfs(adjacency_lists(params), u, faults.vertices, stop=v)
    return distances.get(v, INFINITY)


def _diameter(
    params: GraphParams,
    blocked: FrozenSet[Vertex]
) -> Tuple[Distance, Tuple[Vertex, Vertex]]:
    """Max pairwise distance among survivors and the first pair attaining it."""
    adjacency = adjacency_lists(params)
    survivors = [vertex for vertex in adjacency if vertex not in blocked]
    if len(survivors) < 2:
        raise TrivialGraphError(
            f"{params} minus {len(blocked)} faults leaves {len(survivors)} vertices"
        )

    best: Distance = -1
    witness = (survivors[0], survivors[1])
    for index, source in enumerate(survivors):
        distances = _bfs(adjacency, source, blocked)
        if len(distances) < len(survivors):
            missing = next(t for t in survivors if t not in distances)
            return INFINITY, (min(source, missing), max(source, missing))
        for target in survivors[index + 1:]:
            if distances[target] > best:
                best, witness = distances[target], (source, target)
    return best, witness


def exact_diameter(params: GraphParams, faults: Optional[FaultSet] = None) -> DiameterReport:
    """
    Maximum distance over all surviving pairs.

    Raises:
        TrivialGraphError: If fewer than 2 vertices survive
    """
    faults = faults or FaultSet()
    start = time.perf_counter()
    with metrics.track_oracle("exact_diameter"):
        value, pair = _diameter(params, faults.vertices)
    logger.log_oracle_run(
        "exact_diameter", str(params), (time.perf_counter() - start) * 1000,
        faults=faults.to_list(), value=format_value(value)
    )
    return DiameterReport("diameter", value, pair, faults)


def shortest_path_count(
    params: GraphParams,
    u: Vertex,
    v: Vertex,
    faults: Optional[FaultSet] = None
) -> int:
    """Number of distinct shortest uv-paths (0 when unreachable)."""
    faults = faults or FaultSet()
    _, counts = _bfs_counts(adjacency_lists(params), u, faults.vertices)
    return counts.get(v, 0)


def all_shortest_paths_through(
    params: GraphParams,
    u: Vertex,
    v: Vertex,
    w: Vertex
) -> bool:
    """
    True iff every shortest uv-path contains w.

    Paths through w are counted as (#shortest uw-paths) * (#shortest wv-paths)
    when w sits on the predecessor DAG, and compared against the total.
    """
    for vertex in (u, v, w):
        _check_member(params, vertex)
    if w in (u, v):
        return True
    adjacency = adjacency_lists(params)
    from_u, count_u = _bfs_counts(adjacency, u, frozenset())
    from_v, count_v = _bfs_counts(adjacency, v, frozenset())
    if from_u[w] + from_v[w] != from_u[v]:
        return False
    return count_u[w] * count_v[w] == count_u[v]


def all_pairs_match_h(params: GraphParams) -> Tuple[int, int, Optional[Tuple[Vertex, Vertex]]]:
    """
    Compare BFS distance with the h-metric on every unordered pair.

    Returns:
        (pairs checked, pairs matching, first mismatching pair or None)
    """
    vertices = enumerate_vertices(params)
    adjacency = adjacency_lists(params)
    checked = matched = 0
    mismatch = None
    for index, source in enumerate(vertices):
        distances = _bfs(adjacency, source, frozenset())
        for target in vertices[index + 1:]:
            checked += 1
            if distances.get(target) == h_distance(source, target):
                matched += 1
            elif mismatch is None:
                mismatch = (source, target)
    return checked, matched, mismatch

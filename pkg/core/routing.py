"""
Disjoint Path Routing

Builds containers of internally vertex-disjoint paths between two vertices
of T_m^n and picks fault-free or width-limited routes out of them.

For a pair (u, v) with p down positions and q up positions:
- p*q short paths of length h(u, v), one per (up rotation, down rotation),
- one detour of length h(u, v)+1 per equal position k, whose internal
  vertices all hold v_k+1 at coordinate k.
Coordinate k separates every detour from the short paths and from each other.

Usage:
    from core.routing import build_container, route_avoiding

    container = build_container(u, v)
    container.lengths  # [2, 3]
    path = route_avoiding(u, v, faults)
"""

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from core.exceptions import (
    FaultBudgetError,
    FaultyEndpointError,
    IdenticalEndpointsError,
    NotEqualPositionError,
    RotationRangeError,
    SimplexError,
    WidthRangeError,
)
from core.simplex import (
    GraphParams,
    Vertex,
    classify_positions,
    enumerate_vertices,
    h_distance,
)
from observability.centralized_logger import get_logger
from observability.metrics import metrics

logger = get_logger(__name__)


@dataclass(frozen=True)
class Path:
    """An ordered vertex sequence; consecutive vertices are adjacent."""

    vertices: Tuple[Vertex, ...]

    @property
    def source(self) -> Vertex:
        return self.vertices[0]

    @property
    def target(self) -> Vertex:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.vertices) - 1

    @property
    def internal(self) -> Tuple[Vertex, ...]:
        return self.vertices[1:-1]

    def to_list(self) -> List[str]:
        return [str(vertex) for vertex in self.vertices]

    def __str__(self) -> str:
        return " -> ".join(self.to_list())


@dataclass(frozen=True)
class RotationSchedule:
    """Order in which a set of coordinates is driven to its target values."""

    order: Tuple[int, ...]


@dataclass
class Container:
    """Pairwise internally disjoint source-target paths."""

    source: Vertex
    target: Vertex
    short_paths: List[Path] = field(default_factory=list)
    detour_paths: List[Path] = field(default_factory=list)

    @property
    def paths(self) -> List[Path]:
        """Short paths in rotation order, then detours by ascending k."""
        return self.short_paths + self.detour_paths

    @property
    def size(self) -> int:
        return len(self.short_paths) + len(self.detour_paths)

    @property
    def lengths(self) -> List[int]:
        return [path.length for path in self.paths]

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to the container JSON schema."""
        return {
            "params": {"n": self.source.n, "m": self.source.m},
            "u": str(self.source),
            "v": str(self.target),
            "paths": [path.to_list() for path in self.paths],
            "lengths": self.lengths,
        }


def rotation(positions: Iterable[int], r: int) -> RotationSchedule:
    """
    The r-th rotational schedule over a position set.

    The canonical order is descending; schedule r starts at its r-th entry
    and wraps around: positions {2,1,0} with r=2 give (1, 0, 2).

    Raises:
        RotationRangeError: If r is not in 1..|positions|
    """
    canonical = sorted(set(positions), reverse=True)
    if not 1 <= r <= len(canonical):
        raise RotationRangeError(r, len(canonical))
    return RotationSchedule(tuple(canonical[r - 1:] + canonical[:r - 1]))


def _unit_steps(schedule: RotationSchedule, amounts: Dict[int, int]) -> List[int]:
    """Expand a schedule into one index per unit, exhausting each index in turn."""
    steps: List[int] = []
    for index in schedule.order:
        steps.extend([index] * amounts[index])
    return steps


def _walk(u: Vertex, v: Vertex, up_rot: int, down_rot: int) -> List[Vertex]:
    """Vertices of the short walk from u to v; [u] when u == v."""
    classes = classify_positions(u, v)
    if not classes.down:
        return [u]
    up_schedule = rotation(classes.up, up_rot)
    down_schedule = rotation(classes.down, down_rot)
    increments = _unit_steps(up_schedule, {i: v.coord(i) - u.coord(i) for i in classes.up})
    decrements = _unit_steps(down_schedule, {i: u.coord(i) - v.coord(i) for i in classes.down})

    walk = [u]
    current = u
    for source, target in zip(decrements, increments):
        current = current.transfer(source, target)
        walk.append(current)
    return walk


def construct_short_path(u: Vertex, v: Vertex, up_rot: int, down_rot: int) -> Path:
    """
    A shortest uv-path from one up-schedule and one down-schedule.

    Step t moves one unit from the active down coordinate to the active up
    coordinate; each schedule advances once its coordinate reaches v.

    Args:
        u: Source vertex
        v: Target vertex
        up_rot: Up-schedule rotation, 1..q
        down_rot: Down-schedule rotation, 1..p

    Returns:
        Path of length h(u, v)

    Raises:
        IdenticalEndpointsError: If u == v
        RotationRangeError: If a rotation is out of range
    """
    if u == v:
        raise IdenticalEndpointsError(u)
    return Path(tuple(_walk(u, v, up_rot, down_rot)))


def construct_detour_path(u: Vertex, v: Vertex, k: int) -> Path:
    """
    A uv-path of length h(u, v)+1 pinned at coordinate k.

    The first step moves a unit from the highest down coordinate into k,
    the last step drains k into the lowest up coordinate, and the inner
    walk between them uses rotations (1, 1). Every internal vertex holds
    v_k+1 at coordinate k.

    Raises:
        IdenticalEndpointsError: If u == v
        NotEqualPositionError: If k is not an equal position of (u, v)
    """
    if u == v:
        raise IdenticalEndpointsError(u)
    classes = classify_positions(u, v)
    if k not in classes.equal:
        raise NotEqualPositionError(k, classes.equal)

    u_prime = u.transfer(max(classes.down), k)
    v_prime = v.transfer(min(classes.up), k)
    inner = _walk(u_prime, v_prime, 1, 1)
    return Path((u, *inner, v))


def container_width(u: Vertex, v: Vertex) -> int:
    """Container size n+1-(p+q)+pq for the pair."""
    classes = classify_positions(u, v)
    return u.n + 1 - (classes.p + classes.q) + classes.p * classes.q


def build_container(u: Vertex, v: Vertex) -> Container:
    """
    Build the full container between two distinct vertices.

    Short paths come in (up_rot, down_rot) lexicographic order, detours by
    ascending equal index. The container holds n+1-(p+q)+pq >= n paths.

    Raises:
        IdenticalEndpointsError: If u == v
    """
    if u == v:
        raise IdenticalEndpointsError(u)
    classes = classify_positions(u, v)
    container = Container(source=u, target=v)
    for up_rot in range(1, classes.q + 1):
        for down_rot in range(1, classes.p + 1):
            container.short_paths.append(construct_short_path(u, v, up_rot, down_rot))
    for k in sorted(classes.equal):
        container.detour_paths.append(construct_detour_path(u, v, k))

    metrics.track_container(container.size)
    return container


def route_avoiding(u: Vertex, v: Vertex, faults: Iterable[Vertex]) -> Path:
    """
    First container path whose internal vertices avoid every fault.

    With at most n-1 faults one of the n or more internally disjoint paths
    is always clean, so the result has length at most h(u, v)+1.

    Raises:
        FaultyEndpointError: If u or v is faulty
        FaultBudgetError: If there are n or more faults
    """
    fault_set = frozenset(faults)
    for endpoint in (u, v):
        if endpoint in fault_set:
            raise FaultyEndpointError(endpoint)
    if len(fault_set) >= u.n:
        raise FaultBudgetError(len(fault_set), u.n - 1)
    if u == v:
        return Path((u,))

    for path in build_container(u, v).paths:
        if fault_set.isdisjoint(path.internal):
            return path
    raise SimplexError(f"No fault-free container path between {u} and {v}")


def select_width(container: Container, omega: int) -> List[Path]:
    """
    The omega container paths with the smallest maximum length.

    Container order already lists short paths before detours, so the
    first omega paths are optimal; ties keep rotation order.

    Raises:
        WidthRangeError: If omega is not in 1..container.size
    """
    if not 1 <= omega <= container.size:
        raise WidthRangeError(omega, 1, container.size)
    ranked = sorted(container.paths, key=lambda path: path.length)
    return ranked[:omega]


def constructive_wide_bound(
    params: GraphParams,
    omega: int,
    pairs: Sequence[Tuple[Vertex, Vertex]] = ()
) -> Tuple[int, Tuple[Vertex, Vertex]]:
    """
    Upper bound on the omega-wide diameter read off the containers.

    Args:
        params: Instance
        omega: Width, 1..n
        pairs: Pairs to scan (default: every unordered pair)

    Returns:
        (bound, witness pair attaining it)
    """
    if not 1 <= omega <= params.n:
        raise WidthRangeError(omega, 1, params.n)
    start = time.perf_counter()
    scan = pairs or list(combinations(enumerate_vertices(params), 2))
    best = -1
    witness = scan[0]
    for u, v in scan:
        longest = max(path.length for path in select_width(build_container(u, v), omega))
        if longest > best:
            best, witness = longest, (u, v)
    logger.log_oracle_run(
        "constructive_wide_bound", str(params), (time.perf_counter() - start) * 1000,
        omega=omega, value=best, pairs=len(scan)
    )
    return best, witness

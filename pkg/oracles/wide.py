"""
Wide-Diameter Oracle

Exhaustive length-bounded search for omega internally disjoint uv-paths.

Candidate paths are enumerated one length at a time, starting at h(u, v),
by depth-first search pruned with the h-metric (a vertex x is only entered
if h(x, v) still fits in the remaining length). After each length, a
backtracking packer looks for omega pairwise internally disjoint
candidates, shortest first. The first length where packing succeeds is the
pair's minimal bound, so per-pair results are exact.

Every DFS node and packing step counts as one expansion; crossing the
budget raises SearchBudgetExceededError instead of returning a guess.
"""

import time
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from config import get_config
from core.exceptions import (
    IdenticalEndpointsError,
    SearchBudgetExceededError,
    WidthRangeError,
)
from core.simplex import GraphParams, Vertex, enumerate_vertices, h_distance
from observability.centralized_logger import get_logger
from observability.metrics import metrics
from oracles.adjacency import adjacency_lists, remaining_distance
from oracles.distance import INFINITY, DiameterReport, Distance, format_value

logger = get_logger(__name__)


class _Budget:
    """Node-expansion counter for one search."""

    def __init__(self, limit: int, context: str):
        self.limit = limit
        self.context = context
        self.used = 0

    def spend(self, count: int = 1) -> None:
        self.used += count
        if self.used > self.limit:
            raise SearchBudgetExceededError(self.used, self.limit, self.context)


def _paths_of_length(
    adjacency: Dict[Vertex, Tuple[Vertex, ...]],
    u: Vertex,
    v: Vertex,
    length: int,
    budget: _Budget
) -> List[FrozenSet[Vertex]]:
    """Internal vertex sets of every simple uv-path with exactly `length` edges."""
    found: List[FrozenSet[Vertex]] = []
    path = [u]
    on_path = {u}

    def extend(current: Vertex, left: int) -> None:
        budget.spend()
        for neighbor in adjacency[current]:
            if neighbor == v:
                if left == 1:
                    found.append(frozenset(path[1:]))
                continue
            if neighbor in on_path or remaining_distance(neighbor, v) > left - 1:
                continue
            path.append(neighbor)
            on_path.add(neighbor)
            extend(neighbor, left - 1)
            path.pop()
            on_path.discard(neighbor)

    extend(u, length)
    return found


def _pack(candidates: List[FrozenSet[Vertex]], omega: int, budget: _Budget) -> bool:
    """Whether omega candidates are pairwise disjoint; candidates sorted shortest first."""
    total = len(candidates)

    def place(start: int, used: FrozenSet[Vertex], chosen: int) -> bool:
        if chosen == omega:
            return True
        for index in range(start, total):
            if total - index < omega - chosen:
                return False
            budget.spend()
            internal = candidates[index]
            if used.isdisjoint(internal) and place(index + 1, used | internal, chosen + 1):
                return True
        return False

    return place(0, frozenset(), 0)


def _minimal_bound(
    params: GraphParams,
    u: Vertex,
    v: Vertex,
    omega: int,
    cap: int,
    budget: _Budget
) -> Optional[int]:
    """Least length bound <= cap admitting omega disjoint paths, or None."""
    adjacency = adjacency_lists(params)
    candidates: List[FrozenSet[Vertex]] = []
    for length in range(h_distance(u, v), cap + 1):
        candidates.extend(_paths_of_length(adjacency, u, v, length, budget))
        if len(candidates) >= omega and _pack(candidates, omega, budget):
            return length
    return None


def _check_width(params: GraphParams, omega: int) -> None:
    if not 1 <= omega <= params.vertex_count - 1:
        raise WidthRangeError(omega, 1, params.vertex_count - 1)


def disjoint_paths_within(
    params: GraphParams,
    u: Vertex,
    v: Vertex,
    omega: int,
    length_bound: int,
    budget: Optional[int] = None
) -> bool:
    """
    Whether omega internally disjoint uv-paths of length <= length_bound exist.

    Args:
        params: Instance
        u: Source
        v: Target
        omega: Number of paths
        length_bound: Maximum path length
        budget: Node-expansion budget (default: search.budget from config)

    Raises:
        IdenticalEndpointsError: If u == v
        SearchBudgetExceededError: If the search outgrows the budget
    """
    if u == v:
        raise IdenticalEndpointsError(u)
    _check_width(params, omega)
    limit = budget if budget is not None else get_config().search_budget
    counter = _Budget(limit, f"{omega} paths {u} -> {v} within {length_bound}")
    cap = min(length_bound, params.vertex_count - 1)
    try:
        return _minimal_bound(params, u, v, omega, cap, counter) is not None
    finally:
        metrics.track_expansions(counter.used)


def exact_wide_diameter(
    params: GraphParams,
    omega: int,
    budget: Optional[int] = None
) -> DiameterReport:
    """
    Exact omega-wide diameter: max over pairs of the least feasible length bound.

    Each pair is searched upward from h(u, v) with its own expansion budget.
    A pair with no omega disjoint paths at all makes the value INFINITY.

    Raises:
        SearchBudgetExceededError: If any pair's search outgrows the budget
    """
    _check_width(params, omega)
    limit = budget if budget is not None else get_config().search_budget
    cap = params.vertex_count - 1
    start = time.perf_counter()
    spent = 0
    best: Distance = -1
    witness = None

    try:
        with metrics.track_oracle("exact_wide_diameter"):
            for u, v in combinations(enumerate_vertices(params), 2):
                counter = _Budget(limit, f"{omega}-wide pair {u} -> {v}")
                try:
                    bound = _minimal_bound(params, u, v, omega, cap, counter)
                finally:
                    spent += counter.used
                value: Distance = INFINITY if bound is None else bound
                if value > best:
                    best, witness = value, (u, v)
                    if best == INFINITY:
                        break
    finally:
        metrics.track_expansions(spent)

    logger.log_oracle_run(
        "exact_wide_diameter", str(params), (time.perf_counter() - start) * 1000,
        omega=omega, expansions=spent, value=format_value(best)
    )
    return DiameterReport("wide_diameter", best, witness, omega=omega)

"""
Fault-Diameter Oracle

D_omega is the largest diameter of the instance after deleting fewer than
omega vertices. Deleting a vertex never shortens a surviving distance, so
by default only fault sets of size exactly omega-1 are enumerated; the
exhaustive mode walks every size below omega for audit runs.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from itertools import chain, combinations
from typing import Iterator, Optional, Tuple

from core.exceptions import WidthRangeError
from core.simplex import GraphParams, Vertex, enumerate_vertices
from observability.centralized_logger import get_logger
from observability.metrics import metrics
from oracles.distance import (
    INFINITY,
    DiameterReport,
    Distance,
    FaultSet,
    _diameter,
    format_value,
)

logger = get_logger(__name__)


def _fault_sets(params: GraphParams, omega: int, exhaustive: bool) -> Iterator[Tuple[Vertex, ...]]:
    vertices = enumerate_vertices(params)
    sizes = range(omega) if exhaustive else [omega - 1]
    return chain.from_iterable(combinations(vertices, size) for size in sizes)


def _diameter_under(
    task: Tuple[GraphParams, Tuple[Vertex, ...]]
) -> Tuple[Distance, Tuple[Vertex, Vertex]]:
    params, faults = task
    return _diameter(params, frozenset(faults))


def exact_fault_diameter(
    params: GraphParams,
    omega: int,
    exhaustive: bool = False,
    workers: int = 1
) -> DiameterReport:
    """
    Exact (omega-1)-fault diameter by fault-set enumeration.

    Args:
        params: Instance
        omega: Width; fault sets have fewer than omega vertices
        exhaustive: Enumerate every size below omega, not just omega-1
        workers: Process count for the fault-set fan-out (results merge in order)

    Returns:
        DiameterReport with the worst fault set and pair; value INFINITY
        when some fault set disconnects the instance

    Raises:
        WidthRangeError: If omega < 1 or omega-1 faults leave fewer than 2 vertices
    """
    if not 1 <= omega <= params.vertex_count - 1:
        raise WidthRangeError(omega, 1, params.vertex_count - 1)

    start = time.perf_counter()
    best: Distance = -1
    witness_pair: Optional[Tuple[Vertex, Vertex]] = None
    witness_faults: Tuple[Vertex, ...] = ()
    tasks = ((params, faults) for faults in _fault_sets(params, omega, exhaustive))

    with metrics.track_oracle("exact_fault_diameter"):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                outcomes = zip(
                    _fault_sets(params, omega, exhaustive),
                    pool.map(_diameter_under, tasks, chunksize=64)
                )
                best, witness_pair, witness_faults = _reduce(outcomes)
        else:
            outcomes = (
                (faults, _diameter_under((params, faults)))
                for faults in _fault_sets(params, omega, exhaustive)
            )
            best, witness_pair, witness_faults = _reduce(outcomes)

    logger.log_oracle_run(
        "exact_fault_diameter", str(params), (time.perf_counter() - start) * 1000,
        omega=omega, exhaustive=exhaustive, value=format_value(best)
    )
    return DiameterReport(
        "fault_diameter",
        best,
        witness_pair,
        FaultSet(frozenset(witness_faults)),
        omega=omega
    )


def _reduce(outcomes) -> Tuple[Distance, Tuple[Vertex, Vertex], Tuple[Vertex, ...]]:
    """Keep the first fault set attaining the maximum; stop at a disconnection."""
    best: Distance = -1
    witness_pair = None
    witness_faults: Tuple[Vertex, ...] = ()
    for faults, (value, pair) in outcomes:
        if value > best:
            best, witness_pair, witness_faults = value, pair, faults
            if best == INFINITY:
                break
    return best, witness_pair, witness_faults

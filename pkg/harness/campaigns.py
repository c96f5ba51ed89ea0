"""
Verification Campaigns

Each verify_* function checks one published claim on one instance and
returns ClaimResults. Observed values come from the oracles (BFS, max-flow,
fault-set enumeration, bounded disjoint-path search) or, for router
containers, from the independent checker in harness.checks.

run_campaign() fans the per-instance work out over a grid and merges the
results back in grid order, so output depends only on (grid, seed).
"""

import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from config import DEFAULTS, ToolkitConfig
from core.embeddings import (
    TripyVertex,
    mesh_view,
    sigma1,
    sigma2,
    sigma2_printed,
    simplex_view,
    tripy_view,
    verify_isomorphism,
)
from core.exceptions import InvalidParamsError, InvalidVertexError, SearchBudgetExceededError
from core.routing import build_container, constructive_wide_bound
from core.simplex import (
    GraphParams,
    Vertex,
    corner,
    enumerate_vertices,
    make_vertex,
    minimum_degree,
)
from harness.checks import check_container
from harness.results import CampaignReport, ClaimResult, Section
from observability.centralized_logger import get_logger
from observability.metrics import metrics
from oracles import (
    FaultSet,
    all_pairs_match_h,
    all_shortest_paths_through,
    bfs_distance,
    exact_diameter,
    exact_fault_diameter,
    exact_wide_diameter,
    max_disjoint_paths,
    shortest_path_count,
    vertex_connectivity,
)
from oracles.distance import format_value

logger = get_logger(__name__)

_GRID_PATTERN = re.compile(r"^\s*(\d+)(?:\.\.(\d+))?\s*,\s*(\d+)(?:\.\.(\d+))?\s*$")

_CAMPAIGN = DEFAULTS["campaign"]
_EMBEDDINGS = DEFAULTS["embeddings"]


def _default(key: str):
    """default_factory reading a dotted key from the built-in config defaults."""
    section, name = key.split(".")
    return lambda: DEFAULTS[section][name]


class CampaignSettings(BaseModel):
    """Knobs for one campaign run."""

    grid: str = Field(default_factory=_default("campaign.grid"))
    seed: int = Field(default_factory=_default("campaign.seed"))
    pair_budget: int = Field(default_factory=_default("campaign.pair_budget"), gt=0)
    full_pair_limit: int = Field(default_factory=_default("campaign.full_pair_limit"), gt=0)
    flow_check_limit: int = Field(default_factory=_default("campaign.flow_check_limit"), ge=0)
    search_budget: int = Field(default_factory=_default("search.budget"), gt=0)
    workers: int = Field(default_factory=_default("campaign.workers"), gt=0)
    embeddings: bool = True
    max_side: int = Field(default_factory=_default("embeddings.max_side"), gt=0)
    max_levels: int = Field(default_factory=_default("embeddings.max_levels"), gt=0)

    @classmethod
    def from_config(cls, config: ToolkitConfig, **overrides: Any) -> "CampaignSettings":
        """Settings from a ToolkitConfig; None-valued overrides are ignored."""
        values = {
            "grid": config.grid,
            "seed": config.seed,
            "pair_budget": config.pair_budget,
            "full_pair_limit": config.full_pair_limit,
            "flow_check_limit": config.flow_check_limit,
            "search_budget": config.search_budget,
            "workers": config.workers,
            "max_side": config.max_side,
            "max_levels": config.max_levels,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def parse_grid(text: str) -> List[GraphParams]:
    """
    Parse "n1..n2,m1..m2" (either side may be a single value) into instances.

    Instances are ordered by n, then m.

    Raises:
        InvalidParamsError: On malformed text, empty ranges, or n, m < 1
    """
    match = _GRID_PATTERN.match(text)
    if not match:
        raise InvalidParamsError(f"Grid '{text}' is not of the form n1..n2,m1..m2")
    n_low, n_high, m_low, m_high = match.groups()
    n_range = range(int(n_low), int(n_high or n_low) + 1)
    m_range = range(int(m_low), int(m_high or m_low) + 1)
    if not n_range or not m_range:
        raise InvalidParamsError(f"Grid '{text}' has an empty range")
    return [GraphParams(n=n, m=m) for n in n_range for m in m_range]


def _params_dict(params: GraphParams) -> Dict[str, int]:
    return {"n": params.n, "m": params.m}


def _claim(
    claim_id: str,
    params: GraphParams,
    expected: Any,
    observed: Any,
    witness: Optional[Dict[str, Any]] = None,
    omega: Optional[int] = None,
    section: Section = Section.THEOREM
) -> ClaimResult:
    result = ClaimResult(
        claim_id=claim_id,
        params=_params_dict(params),
        omega=omega,
        expected=expected,
        observed=observed,
        witness=witness or {},
        section=section,
    )
    metrics.track_claim(claim_id, result.verdict)
    logger.log_claim_result(
        claim_id, str(params), result.passed, omega=omega, section=section.value
    )
    return result


def _require_connected_instance(params: GraphParams, claim: str) -> None:
    if params.n < 2:
        raise InvalidParamsError(f"{claim} needs n >= 2, got {params}")


def _forced_vertex(params: GraphParams) -> Vertex:
    """(m-1) 0^(n-1) 1: the corner m0^n with one unit moved to coordinate 0."""
    return corner(params, params.n).transfer(params.n, 0)


def sample_pairs(
    params: GraphParams,
    count: int,
    seed: int,
    full_pair_limit: int = _CAMPAIGN["full_pair_limit"]
) -> Tuple[List[Tuple[Vertex, Vertex]], bool]:
    """
    Unordered vertex pairs to check and whether they were sampled.

    Every pair is returned when the instance has at most full_pair_limit
    vertices or no more than `count` pairs; otherwise `count` pairs are
    drawn uniformly with a seeded generator.
    """
    vertices = enumerate_vertices(params)
    pairs = list(combinations(vertices, 2))
    if len(vertices) <= full_pair_limit or len(pairs) <= count:
        return pairs, False
    rng = random.Random(seed)
    return sorted(rng.sample(pairs, count)), True


def verify_vertex_count(params: GraphParams) -> ClaimResult:
    """|V(T_m^n)| = C(n+m, m), against enumeration."""
    return _claim(
        "vertex_count", params, params.vertex_count, len(enumerate_vertices(params))
    )


def verify_containers(
    params: GraphParams,
    pair_budget: int = _CAMPAIGN["pair_budget"],
    seed: int = _CAMPAIGN["seed"],
    full_pair_limit: int = _CAMPAIGN["full_pair_limit"],
    flow_check_limit: int = _CAMPAIGN["flow_check_limit"]
) -> List[ClaimResult]:
    """
    Container claims over all (or sampled) pairs.

    Emits container validity (checked independently of the router), the
    width >= n bound, and, on small instances, that max-flow admits at
    least as many disjoint paths as the container holds.
    """
    _require_connected_instance(params, "verify_containers")
    pairs, sampled = sample_pairs(params, pair_budget, seed, full_pair_limit)
    flow_check = params.vertex_count <= flow_check_limit

    valid = wide_enough = flow_ok = 0
    first_problem: Optional[Dict[str, Any]] = None
    narrowest: Optional[Tuple[int, Tuple[Vertex, Vertex]]] = None
    flow_witness: Optional[Dict[str, Any]] = None

    for u, v in pairs:
        container = build_container(u, v)
        problems = check_container(container)
        if not problems:
            valid += 1
        elif first_problem is None:
            first_problem = {"u": str(u), "v": str(v), "problem": problems[0]}

        if container.size >= params.n:
            wide_enough += 1
        if narrowest is None or container.size < narrowest[0]:
            narrowest = (container.size, (u, v))

        if flow_check:
            flow = max_disjoint_paths(params, u, v)
            if flow >= container.size:
                flow_ok += 1
            elif flow_witness is None:
                flow_witness = {
                    "u": str(u), "v": str(v), "flow": flow, "container": container.size
                }

    coverage = {"pairs": len(pairs), "sampled": sampled, "seed": seed}
    width, (nu, nv) = narrowest
    results = [
        _claim("container.valid", params, len(pairs), valid,
               {**coverage, **(first_problem or {})}),
        _claim("container.width_at_least_n", params, len(pairs), wide_enough,
               {**coverage, "min_width": width, "u": str(nu), "v": str(nv)}),
    ]
    if flow_check:
        results.append(_claim(
            "container.flow_dominates", params, len(pairs), flow_ok,
            {**coverage, **(flow_witness or {})}
        ))
    return results


def verify_connectivity_and_diameter(params: GraphParams) -> List[ClaimResult]:
    """kappa = delta = n, d(u, v) = h(u, v) on all pairs, and diameter m."""
    _require_connected_instance(params, "verify_connectivity_and_diameter")
    checked, matched, mismatch = all_pairs_match_h(params)
    diameter = exact_diameter(params)
    distance_witness = {"pairs": checked}
    if mismatch is not None:
        distance_witness.update(u=str(mismatch[0]), v=str(mismatch[1]))
    return [
        _claim("connectivity.equals_n", params, params.n, vertex_connectivity(params)),
        _claim("connectivity.minimum_degree", params, params.n, minimum_degree(params)),
        _claim("distance.equals_h", params, checked, matched, distance_witness),
        _claim("distance.diameter", params, params.m, format_value(diameter.value),
               diameter.to_dict()),
    ]


def verify_bottleneck(params: GraphParams) -> ClaimResult:
    """Every shortest m0^n -> 0^n m path passes through (m-1)0^(n-1)1."""
    _require_connected_instance(params, "verify_bottleneck")
    if params.m < 2:
        raise InvalidParamsError(f"verify_bottleneck needs m >= 2, got {params}")
    u, v, w = corner(params, params.n), corner(params, 0), _forced_vertex(params)
    return _claim(
        "bottleneck.forced_vertex", params, True,
        all_shortest_paths_through(params, u, v, w),
        {"u": str(u), "v": str(v), "w": str(w),
         "shortest_paths": shortest_path_count(params, u, v)},
    )


def verify_fault_lower_bound(params: GraphParams) -> ClaimResult:
    """Deleting the forced vertex stretches the corner-to-corner distance to m+1."""
    _require_connected_instance(params, "verify_fault_lower_bound")
    if params.m < 2:
        raise InvalidParamsError(f"verify_fault_lower_bound needs m >= 2, got {params}")
    u, v, w = corner(params, params.n), corner(params, 0), _forced_vertex(params)
    distance = bfs_distance(params, u, v, FaultSet.of(params, [w]))
    return _claim(
        "fault_lower_bound", params, params.m + 1, format_value(distance),
        {"u": str(u), "v": str(v), "faults": [str(w)]},
    )


def _nondecreasing(values: List[Any]) -> bool:
    return all(a <= b for a, b in zip(values, values[1:]))


def verify_theorem(
    params: GraphParams,
    search_budget: Optional[int] = None,
    workers: int = 1
) -> List[ClaimResult]:
    """
    Fault and wide diameter for every omega in 1..n.

    omega = 1 is the baseline d_1 = D_1 = m; 2 <= omega <= n expects m+1.
    When the wide-diameter search outgrows its budget the claim falls back
    to the sandwich D_omega <= d_omega <= constructive bound and records
    the method in the witness. m = 1 results land in the
    outside-hypothesis section.
    """
    _require_connected_instance(params, "verify_theorem")
    section = Section.OUTSIDE_HYPOTHESIS if params.m == 1 else Section.THEOREM
    results: List[ClaimResult] = []
    fault_values: List[Any] = []
    wide_values: List[Any] = []

    for omega in range(1, params.n + 1):
        expected = params.m if omega == 1 else params.m + 1
        fault = exact_fault_diameter(params, omega, workers=workers)
        results.append(_claim(
            "theorem.fault_diameter", params, expected, format_value(fault.value),
            fault.to_dict(), omega=omega, section=section,
        ))

        try:
            wide = exact_wide_diameter(params, omega, budget=search_budget)
            observed = format_value(wide.value)
            witness = {"method": "exact", **wide.to_dict()}
        except SearchBudgetExceededError as exc:
            upper, (bu, bv) = constructive_wide_bound(params, omega)
            lower = format_value(fault.value)
            observed = upper if lower == upper else f"{lower}..{upper}"
            witness = {
                "method": "sandwich", "lower": lower, "upper": upper,
                "u": str(bu), "v": str(bv), "expansions": exc.expansions,
            }
            logger.warning(
                f"Wide diameter search on {params} exceeded budget; using sandwich",
                omega=omega, budget=exc.budget,
            )
        results.append(_claim(
            "theorem.wide_diameter", params, expected, observed,
            witness, omega=omega, section=section,
        ))
        fault_values.append(fault.value)
        wide_values.append(observed)

        if omega >= 2:
            bound, (bu, bv) = constructive_wide_bound(params, omega)
            results.append(_claim(
                "theorem.constructive_bound", params, params.m + 1, bound,
                {"u": str(bu), "v": str(bv)}, omega=omega, section=section,
            ))

    numeric_wide = [value for value in wide_values if isinstance(value, int)]
    chains = {"fault": [format_value(v) for v in fault_values], "wide": wide_values}
    results.append(_claim(
        "monotonicity.fault_chain", params, True, _nondecreasing(fault_values),
        chains, section=section,
    ))
    results.append(_claim(
        "monotonicity.wide_chain", params, True,
        len(numeric_wide) == len(wide_values) and _nondecreasing(numeric_wide),
        chains, section=section,
    ))
    results.append(_claim(
        "monotonicity.fault_le_wide", params, True,
        len(numeric_wide) == len(wide_values)
        and all(f <= w for f, w in zip(fault_values, numeric_wide)),
        chains, section=section,
    ))
    return results


def verify_embeddings(
    max_side: int = _EMBEDDINGS["max_side"],
    max_levels: int = _EMBEDDINGS["max_levels"]
) -> List[ClaimResult]:
    """
    sigma1 for every mesh side 1..max_side, corrected sigma2 for every tripy
    1..max_levels, and a regression on the published sigma2 formula, which
    leaves the simplex at (2, (1, 0)) for L = 2.
    """
    results = []
    for m in range(1, max_side + 1):
        results.append(_claim(
            "embedding.sigma1", GraphParams(n=2, m=m), True,
            verify_isomorphism(lambda a, m=m: sigma1(a, m), mesh_view(m),
                               simplex_view(GraphParams(n=2, m=m))),
            {"vertices": GraphParams(n=2, m=m).vertex_count},
        ))
    for levels in range(1, max_levels + 1):
        target = GraphParams(n=3, m=levels)
        results.append(_claim(
            "embedding.sigma2", target, True,
            verify_isomorphism(lambda a, L=levels: sigma2(a, L), tripy_view(levels),
                               simplex_view(target)),
            {"vertices": target.vertex_count},
        ))

    target = GraphParams(n=3, m=2)
    probe = TripyVertex(2, 1, 0)
    printed = sigma2_printed(probe, 2)
    try:
        make_vertex(printed, target)
        observed, invariant = "valid", None
    except InvalidVertexError as exc:
        observed, invariant = "invalid", exc.invariant
    results.append(_claim(
        "embedding.sigma2_printed_regression", target, "invalid", observed,
        {"vertex": str(probe), "image": list(printed), "violates": invariant},
    ))
    return results


def _instance_claims(task: Tuple[GraphParams, CampaignSettings]) -> List[ClaimResult]:
    """All claims for one instance; top-level so a process pool can pickle it."""
    params, settings = task
    results = [verify_vertex_count(params)]
    if params.n < 2:
        return results
    results.extend(verify_containers(
        params, settings.pair_budget, settings.seed,
        settings.full_pair_limit, settings.flow_check_limit,
    ))
    results.extend(verify_connectivity_and_diameter(params))
    if params.m >= 2:
        results.append(verify_bottleneck(params))
        results.append(verify_fault_lower_bound(params))
    results.extend(verify_theorem(params, settings.search_budget))
    return results


def run_campaign(settings: CampaignSettings) -> CampaignReport:
    """
    Run every claim over the grid and merge results in grid order.

    Raises:
        InvalidParamsError: If the grid is malformed
        SearchBudgetExceededError: Never for the theorem claims (they fall
            back to the sandwich); only if a caller-level search overruns
    """
    instances = parse_grid(settings.grid)
    start = time.perf_counter()
    tasks = [(params, settings) for params in instances]

    if settings.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            batches = list(pool.map(_instance_claims, tasks))
    else:
        batches = [_instance_claims(task) for task in tasks]

    report = CampaignReport(grid=settings.grid, seed=settings.seed)
    for batch in batches:
        report.results.extend(batch)
    if settings.embeddings:
        report.results.extend(verify_embeddings(settings.max_side, settings.max_levels))

    logger.log_campaign(
        len(instances), len(report.results), len(report.failed),
        (time.perf_counter() - start) * 1000,
        grid=settings.grid, seed=settings.seed, outside_hypothesis=len(report.outside),
    )
    return report

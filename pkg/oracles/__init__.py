"""
Brute-force ground truth for T_m^n.

These oracles share nothing with the router: they search the implicit
adjacency (BFS, bounded DFS) or the materialized graph (max flow) directly.
"""

from oracles.connectivity import max_disjoint_paths, vertex_connectivity
from oracles.distance import (
    INFINITY,
    DiameterReport,
    FaultSet,
    all_pairs_match_h,
    all_shortest_paths_through,
    bfs_distance,
    exact_diameter,
    shortest_path_count,
)
from oracles.fault import exact_fault_diameter
from oracles.wide import disjoint_paths_within, exact_wide_diameter

__all__ = [
    "INFINITY",
    "DiameterReport",
    "FaultSet",
    "all_pairs_match_h",
    "all_shortest_paths_through",
    "bfs_distance",
    "disjoint_paths_within",
    "exact_diameter",
    "exact_fault_diameter",
    "exact_wide_diameter",
    "max_disjoint_paths",
    "shortest_path_count",
    "vertex_connectivity",
]

"""
Container Checks

Validates router output from first principles: adjacency and h-metric from
core.simplex only, nothing from the router itself.
"""

from itertools import combinations
from typing import List

from core.routing import Container
from core.simplex import classify_positions, h_distance, is_adjacent


def check_container(container: Container) -> List[str]:
    """
    Problems found in a container; an empty list means it is valid.

    Checks endpoints, edge validity, simplicity, pairwise internal
    disjointness, and the p*q / n+1-(p+q) length split.
    """
    u, v = container.source, container.target
    problems: List[str] = []
    paths = container.paths

    for index, path in enumerate(paths):
        vertices = path.vertices
        if vertices[0] != u or vertices[-1] != v:
            problems.append(f"path {index} does not join {u} and {v}")
        if len(set(vertices)) != len(vertices):
            problems.append(f"path {index} repeats a vertex")
        for a, b in zip(vertices, vertices[1:]):
            if not is_adjacent(a, b):
                problems.append(f"path {index} uses non-edge {a} - {b}")
                break

    for (i, first), (j, second) in combinations(enumerate(paths), 2):
        shared = set(first.internal) & set(second.internal)
        if shared:
            problems.append(f"paths {i} and {j} share {sorted(shared)[0]}")

    classes = classify_positions(u, v)
    h = h_distance(u, v)
    lengths = [path.length for path in paths]
    expected_short = classes.p * classes.q
    expected_detour = u.n + 1 - (classes.p + classes.q)
    if lengths.count(h) != expected_short:
        problems.append(f"{lengths.count(h)} paths of length {h}, expected {expected_short}")
    if lengths.count(h + 1) != expected_detour:
        problems.append(
            f"{lengths.count(h + 1)} paths of length {h + 1}, expected {expected_detour}"
        )
    if len(lengths) != expected_short + expected_detour:
        problems.append(f"{len(lengths)} paths, expected {expected_short + expected_detour}")
    return problems

"""
Prometheus Metrics Collection for the Simplex Toolkit

This module provides metrics collection for monitoring:
- Verification claims and their verdicts
- Oracle runs and their durations
- Exhaustive search node expansions
- Container construction

Usage:
    from observability.metrics import metrics

    # Track a claim verdict
    metrics.track_claim(claim="theorem.fault_diameter", verdict="pass")

    # Time an oracle run
    with metrics.track_oracle("exact_diameter"):
        ...
"""

import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Union

from prometheus_client import (
    CollectorRegistry,
    Counter,
    Histogram,
    generate_latest,
)

# Private registry so repeated imports in tests never collide with the default one
registry = CollectorRegistry()

# ============================================================================
# CLAIM METRICS
# ============================================================================

claims_total = Counter(
    'simplex_claims_total',
    'Total verification claims evaluated',
    ['claim', 'verdict'],
    registry=registry
)

# ============================================================================
# ORACLE METRICS
# ============================================================================

oracle_runs_total = Counter(
    'simplex_oracle_runs_total',
    'Total oracle invocations',
    ['oracle'],
    registry=registry
)

oracle_duration_seconds = Histogram(
    'simplex_oracle_duration_seconds',
    'Oracle run duration in seconds',
    ['oracle'],
    buckets=[0.001, 0.01, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0, 600.0],
    registry=registry
)

search_expansions_total = Counter(
    'simplex_search_expansions_total',
    'Node expansions spent by bounded disjoint-path searches',
    registry=registry
)

# ============================================================================
# ROUTING METRICS
# ============================================================================

containers_built_total = Counter(
    'simplex_containers_built_total',
    'Total containers constructed',
    registry=registry
)

container_paths_total = Counter(
    'simplex_container_paths_total',
    'Total paths across constructed containers',
    registry=registry
)


# ============================================================================
# METRICS COLLECTOR CLASS
# ============================================================================

class MetricsCollector:
    """
    Central metrics collector for the toolkit.

    Provides convenient methods for tracking metrics from the router,
    the oracles and the verification harness.
    """

    def __init__(self):
        self.registry = registry

    def track_claim(self, claim: str, verdict: str):
        """Track one evaluated claim."""
        claims_total.labels(claim=claim, verdict=verdict).inc()

    @contextmanager
    def track_oracle(self, oracle: str):
        """Context manager timing one oracle run."""
        oracle_runs_total.labels(oracle=oracle).inc()
        start = time.perf_counter()
        try:
            yield
        finally:
            oracle_duration_seconds.labels(oracle=oracle).observe(
                time.perf_counter() - start
            )

    def track_expansions(self, count: int):
        """Add search node expansions."""
        if count > 0:
            search_expansions_total.inc(count)

    def track_container(self, size: int):
        """Track a constructed container of the given width."""
        containers_built_total.inc()
        container_paths_total.inc(size)

    def generate_metrics(self) -> bytes:
        """Generate metrics in Prometheus text format."""
        return generate_latest(self.registry)

    def write_metrics(self, path: Union[str, Path]) -> None:
        """Write the text exposition to a file."""
        Path(path).write_bytes(self.generate_metrics())


# Global metrics collector instance
metrics = MetricsCollector()


def get_metrics_summary() -> Dict[str, Any]:
    """
    Get a summary of current metric totals.

    Returns:
        Dictionary with counter totals keyed by sample name and labels
    """
    summary: Dict[str, Any] = {}
    for family in registry.collect():
        for sample in family.samples:
            if not sample.name.endswith("_total"):
                continue
            labels = ",".join(f"{k}={v}" for k, v in sorted(sample.labels.items()))
            key = f"{sample.name}{{{labels}}}" if labels else sample.name
            summary[key] = sample.value
    return summary

"""
Observability Module for the Simplex Topology Toolkit

- Prometheus metrics for claims, oracle runs, search expansions and containers
- Structured logging to stderr, with optional JSON-lines files

Usage:
    from observability import metrics, get_logger

    metrics.track_claim("theorem.fault_diameter", "pass")

    logger = get_logger("oracles")
    logger.log_oracle_run("fault_diameter", "T_2^2", duration_ms=12.5, omega=2)
"""

from observability.centralized_logger import StructuredLogger, configure_logging, get_logger
from observability.metrics import MetricsCollector, get_metrics_summary, metrics

__all__ = [
    # Metrics
    "metrics",
    "MetricsCollector",
    "get_metrics_summary",

    # Logging
    "StructuredLogger",
    "configure_logging",
    "get_logger",
]

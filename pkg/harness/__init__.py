"""Verification campaigns tying the container router to the brute-force oracles."""

from harness.campaigns import (
    CampaignSettings,
    parse_grid,
    run_campaign,
    sample_pairs,
    verify_bottleneck,
    verify_connectivity_and_diameter,
    verify_embeddings,
    verify_fault_lower_bound,
    verify_containers,
    verify_theorem,
    verify_vertex_count,
)
from harness.checks import check_container
from harness.results import CampaignReport, ClaimResult, Section

__all__ = [
    "CampaignReport",
    "CampaignSettings",
    "ClaimResult",
    "Section",
    "check_container",
    "parse_grid",
    "run_campaign",
    "sample_pairs",
    "verify_bottleneck",
    "verify_connectivity_and_diameter",
    "verify_embeddings",
    "verify_fault_lower_bound",
    "verify_containers",
    "verify_theorem",
    "verify_vertex_count",
]

"""
Claim Results and Campaign Reports

Pydantic models for verification output. A claim passes iff the expected
and observed values are equal; claims about instances outside the theorem
hypothesis (m = 1) are kept in their own section and never fail a campaign.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field
from rich.console import Console
from rich.table import Table


class Section(str, Enum):
    """Report section a claim belongs to."""
    THEOREM = "theorem"
    OUTSIDE_HYPOTHESIS = "outside_hypothesis"


class ClaimResult(BaseModel):
    """One checked claim on one instance."""

    claim_id: str
    params: Dict[str, int]
    omega: Optional[int] = None
    expected: Any
    observed: Any
    witness: Dict[str, Any] = Field(default_factory=dict)
    section: Section = Section.THEOREM

    @computed_field
    @property
    def verdict(self) -> str:
        return "pass" if self.expected == self.observed else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def instance(self) -> str:
        return f"T_{self.params['m']}^{self.params['n']}"


class CampaignReport(BaseModel):
    """Ordered claim results of a campaign plus the knobs that reproduce it."""

    grid: str
    seed: int
    results: List[ClaimResult] = Field(default_factory=list)

    @property
    def failed(self) -> List[ClaimResult]:
        """Failing claims inside the theorem hypothesis."""
        return [
            r for r in self.results
            if r.section == Section.THEOREM and not r.passed
        ]

    @property
    def outside(self) -> List[ClaimResult]:
        return [r for r in self.results if r.section == Section.OUTSIDE_HYPOTHESIS]

    def to_jsonl(self) -> str:
        """One ClaimResult JSON object per line."""
        return "\n".join(result.model_dump_json() for result in self.results)

    def render_table(self, console: Console) -> None:
        """Human-readable tables: theorem claims, then the outside-hypothesis section."""
        inside = [r for r in self.results if r.section == Section.THEOREM]
        console.print(_claims_table(
            f"Claims (grid {self.grid}, seed {self.seed})", inside
        ))
        if self.outside:
            console.print(_claims_table(
                "Outside theorem hypothesis (m = 1: T_1^n is complete)", self.outside
            ))
        total = len(inside)
        console.print(
            f"{total - len(self.failed)}/{total} claims passed; "
            f"{len(self.outside)} reported outside hypothesis"
        )


def _claims_table(title: str, results: List[ClaimResult]) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("Claim", style="cyan")
    table.add_column("Instance")
    table.add_column("ω", justify="right")
    table.add_column("Expected", justify="right")
    table.add_column("Observed", justify="right")
    table.add_column("Verdict")
    for result in results:
        table.add_row(
            result.claim_id,
            result.instance,
            "" if result.omega is None else str(result.omega),
            str(result.expected),
            str(result.observed),
            "[green]pass[/green]" if result.passed else "[red]fail[/red]",
        )
    return table

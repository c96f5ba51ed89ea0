"""
Tests for the command-line interface

Commands are run through run(), which returns the exit code, with stdout
and stderr captured by pytest.
"""

import json

import pytest

from cli import app as cli_app
from cli import run
from harness import CampaignReport, ClaimResult
from observability.centralized_logger import configure_logging


def _run(capsys, *args):
    code = run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQueries:
    """Test suite for generation and oracle commands."""

    def test_gen(self, capsys):
        """Test vertex listing."""
        code, out, _ = _run(capsys, "gen", "-n", "2", "-m", "2")
        assert code == 0
        assert out.splitlines() == ["0,0,2", "0,1,1", "0,2,0", "1,0,1", "1,1,0", "2,0,0"]

    def test_dist(self, capsys):
        """Test dist 2,0,0 0,0,2 on T_2^2."""
        code, out, _ = _run(capsys, "dist", "2,0,0", "0,0,2", "-n", "2", "-m", "2")
        assert code == 0
        assert out.strip() == "2"

    def test_dist_with_fault(self, capsys):
        """Test a fault stretches the distance."""
        code, out, _ = _run(
            capsys, "dist", "2,0,0", "0,0,2", "-n", "2", "-m", "2", "--faults", "1,0,1"
        )
        assert code == 0
        assert out.strip() == "3"

    def test_dist_unreachable(self, capsys):
        """Test the "inf" marker."""
        code, out, _ = _run(
            capsys, "dist", "2,0,0", "0,0,2", "-n", "2", "-m", "2",
            "--faults", "1,0,1", "--faults", "1,1,0",
        )
        assert code == 0
        assert out.strip() == "inf"

    def test_diam_json(self, capsys):
        """Test the full diameter report."""
        code, out, _ = _run(capsys, "diam", "-n", "2", "-m", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["quantity"] == "diameter"
        assert data["value"] == 3

    def test_fault_diam(self, capsys):
        """Test fault-diam -n 2 -m 2 --omega 2."""
        code, out, _ = _run(capsys, "fault-diam", "-n", "2", "-m", "2", "--omega", "2")
        assert code == 0
        assert out.strip() == "3"

    def test_wide_diam(self, capsys):
        """Test wide-diam -n 2 -m 2 --omega 2."""
        code, out, _ = _run(capsys, "wide-diam", "-n", "2", "-m", "2", "--omega", "2")
        assert code == 0
        assert out.strip() == "3"

    def test_wide_diam_budget(self, capsys):
        """Test a budget overrun exits with 3 and a JSON error."""
        code, out, err = _run(
            capsys, "wide-diam", "-n", "2", "-m", "2", "--omega", "2", "--budget", "1"
        )
        assert code == 3
        assert out == ""
        assert json.loads(err.strip().splitlines()[-1])["error"] == "search_budget_exceeded"


class TestRoute:
    """Test suite for the route command."""

    def test_container(self, capsys):
        """Test the container JSON for the T_2^2 corners."""
        code, out, _ = _run(capsys, "route", "2,0,0", "0,0,2", "-n", "2", "-m", "2")
        assert code == 0
        data = json.loads(out)
        assert data["lengths"] == [2, 3]
        assert data["paths"][0] == ["2,0,0", "1,0,1", "0,0,2"]

    def test_fault_avoiding(self, capsys):
        """Test the detour is returned around the forced vertex."""
        code, out, _ = _run(
            capsys, "route", "2,0,0", "0,0,2", "-n", "2", "-m", "2", "--faults", "1,0,1"
        )
        assert code == 0
        data = json.loads(out)
        assert data["length"] == 3
        assert data["faults"] == ["1,0,1"]


class TestMapAndExport:
    """Test suite for embedding and export commands."""

    def test_map_mesh(self, capsys):
        """Test sigma1 on (1,0) with m = 2."""
        code, out, _ = _run(capsys, "map", "--from", "mesh", "-m", "2", "1,0")
        assert code == 0
        assert out.strip() == "1,1,0"

    def test_map_tripy(self, capsys):
        """Test the corrected sigma2 on (2,(1,0)) with L = 2."""
        code, out, _ = _run(capsys, "map", "--from", "tripy", "-m", "2", "2:1,0")
        assert code == 0
        assert out.strip() == "0,1,1,0"

    def test_export_edges(self, capsys):
        """Test T_2^2 has nine edges."""
        code, out, _ = _run(capsys, "export", "-n", "2", "-m", "2", "--format", "edges")
        assert code == 0
        assert len(out.strip().splitlines()) == 9

    def test_export_dot(self, capsys):
        """Test the DOT header and an edge line."""
        code, out, _ = _run(capsys, "export", "-n", "2", "-m", "2", "--format", "dot")
        assert code == 0
        assert out.startswith("graph T {")
        assert ' -- ' in out

    def test_export_json(self, capsys):
        """Test the JSON export counts."""
        code, out, _ = _run(capsys, "export", "-n", "3", "-m", "2", "--format", "json")
        data = json.loads(out)
        assert len(data["vertices"]) == 10
        assert data["params"] == {"n": 3, "m": 2}


class TestVerify:
    """Test suite for the verify command."""

    def test_jsonl(self, capsys):
        """Test a passing campaign in JSON lines."""
        code, out, _ = _run(
            capsys, "verify", "--grid", "2..2,2..2", "--format", "jsonl", "--no-embeddings"
        )
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert lines
        assert all(line["verdict"] == "pass" for line in lines)

    def test_table(self, capsys):
        """Test the human-readable report."""
        code, out, _ = _run(capsys, "verify", "--grid", "2..2,1..1", "--no-embeddings")
        assert code == 0
        assert "Outside theorem hypothesis" in out

    def test_failed_claim_exit_code(self, capsys, monkeypatch):
        """Test a failing claim exits with 2."""
        def failing_campaign(settings):
            return CampaignReport(grid=settings.grid, seed=settings.seed, results=[
                ClaimResult(claim_id="vertex_count", params={"n": 2, "m": 2},
                            expected=6, observed=5),
            ])

        monkeypatch.setattr(cli_app, "run_campaign", failing_campaign)
        code, out, _ = _run(capsys, "verify", "--format", "jsonl")
        assert code == 2
        assert json.loads(out)["verdict"] == "fail"

    def test_metrics_file(self, capsys, tmp_path):
        """Test the Prometheus text file is written."""
        target = tmp_path / "metrics.prom"
        code, _, _ = _run(
            capsys, "verify", "--grid", "2..2,2..2", "--format", "jsonl",
            "--no-embeddings", "--metrics-file", str(target),
        )
        assert code == 0
        assert "simplex_claims_total" in target.read_text()

    def test_metrics_totals_logged(self, capsys, tmp_path, monkeypatch):
        """Test the metric totals are logged after the metrics file is written."""
        log_dir = tmp_path / "logs"
        monkeypatch.setenv("SIMPLEX_LOG_DIR", str(log_dir))
        try:
            code, _, err = _run(
                capsys, "--log-level", "INFO", "verify", "--grid", "2..2,2..2",
                "--format", "jsonl", "--no-embeddings",
                "--metrics-file", str(tmp_path / "metrics.prom"),
            )
        finally:
            configure_logging("WARNING", None)
        assert code == 0
        assert "Metrics written to" in err
        records = [
            json.loads(line)
            for line in (log_dir / "cli.app.jsonl").read_text().splitlines()
        ]
        totals = [r["totals"] for r in records if "totals" in r][-1]
        assert any(key.startswith("simplex_claims_total{") for key in totals)


class TestErrors:
    """Test suite for exit codes and error output."""

    def test_invalid_vertex(self, capsys):
        """Test a coordinate sum violation exits with 1."""
        code, out, err = _run(capsys, "dist", "1,0,0", "0,0,2", "-n", "2", "-m", "2")
        assert code == 1
        assert out == ""
        error = json.loads(err.strip().splitlines()[-1])
        assert error["error"] == "invalid_vertex"

    def test_invalid_params(self, capsys):
        """Test n = 0 exits with 1."""
        code, _, err = _run(capsys, "gen", "-n", "0", "-m", "2")
        assert code == 1
        assert "invalid_params" in err

    def test_missing_option(self, capsys):
        """Test a click usage error exits with 1."""
        code, _, err = _run(capsys, "gen", "-n", "2")
        assert code == 1
        assert "UsageError" in err

    def test_unknown_command(self, capsys):
        """Test an unknown subcommand exits with 1."""
        code, _, _ = _run(capsys, "frobnicate")
        assert code == 1

    def test_bad_grid(self, capsys):
        """Test a malformed grid exits with 1."""
        code, _, err = _run(capsys, "verify", "--grid", "2..3")
        assert code == 1
        assert "invalid_params" in err

    @pytest.mark.parametrize("omega", ["0", "6"])
    def test_width_out_of_range(self, capsys, omega):
        """Test omega outside 1..|V|-1 exits with 1."""
        code, _, err = _run(capsys, "fault-diam", "-n", "2", "-m", "2", "--omega", omega)
        assert code == 1
        assert "width_out_of_range" in err

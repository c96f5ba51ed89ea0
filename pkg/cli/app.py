"""
Command-line entry point for the simplex toolkit.

Command output goes to stdout and is deterministic; logs go to stderr.
Exit codes: 0 success, 1 usage or input error, 2 failed verification
claim, 3 search budget overrun.
"""

import json
import sys
from typing import List, Optional, Sequence, Tuple

import click
from pydantic import ValidationError
from rich.console import Console

from config import get_config
from core.embeddings import parse_mesh_vertex, parse_tripy_vertex, sigma1, sigma2
from core.exceptions import SimplexError
from core.export import to_dot, to_edge_list, to_json
from core.routing import build_container, route_avoiding
from core.simplex import GraphParams, Vertex, enumerate_vertices, parse_vertex
from harness import CampaignSettings, run_campaign
from observability.centralized_logger import configure_logging, get_logger
from observability.metrics import get_metrics_summary, metrics
from oracles import (
    FaultSet,
    bfs_distance,
    exact_diameter,
    exact_fault_diameter,
    exact_wide_diameter,
)
from oracles.distance import format_value

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_FAILED = 2

CONSOLE_WIDTH = 120

logger = get_logger(__name__)


def instance_options(func):
    """Shared -n / -m options."""
    func = click.option("-m", "m", type=int, required=True, help="Side length m >= 1")(func)
    func = click.option("-n", "n", type=int, required=True, help="Dimension n >= 1")(func)
    return func


def faults_option(func):
    return click.option(
        "--faults", "faults", multiple=True, metavar="VERTEX",
        help="Faulty vertex, e.g. 1,0,1 (repeatable)"
    )(func)


def json_option(func):
    return click.option("--json", "as_json", is_flag=True, help="Print the full JSON report")(func)


def _vertex(text: str, params: GraphParams) -> Vertex:
    return parse_vertex(text, params)


def _faults(texts: Sequence[str], params: GraphParams) -> List[Vertex]:
    return [parse_vertex(text, params) for text in texts]


def _dump(payload) -> None:
    click.echo(json.dumps(payload, indent=2))


@click.group()
@click.option(
    "--log-level", default=None,
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Log level for stderr output (default: logging.level from config)"
)
def cli(log_level: Optional[str]):
    """Topology toolkit for the integer simplex network T_m^n."""
    config = get_config()
    configure_logging(log_level or config.log_level, config.log_dir)


@cli.command()
@instance_options
def gen(n: int, m: int):
    """List the vertices of T_m^n in lexicographic order."""
    for vertex in enumerate_vertices(GraphParams(n=n, m=m)):
        click.echo(str(vertex))


@cli.command()
@instance_options
@click.argument("u")
@click.argument("v")
@faults_option
def route(n: int, m: int, u: str, v: str, faults: Tuple[str, ...]):
    """Container between U and V, or a fault-free container path with --faults."""
    params = GraphParams(n=n, m=m)
    source, target = _vertex(u, params), _vertex(v, params)
    if not faults:
        _dump(build_container(source, target).to_dict())
        return
    blocked = _faults(faults, params)
    path = route_avoiding(source, target, blocked)
    _dump({
        "params": {"n": n, "m": m},
        "u": str(source),
        "v": str(target),
        "faults": FaultSet.of(params, blocked).to_list(),
        "path": path.to_list(),
        "length": path.length,
    })


@cli.command()
@instance_options
@click.argument("u")
@click.argument("v")
@faults_option
def dist(n: int, m: int, u: str, v: str, faults: Tuple[str, ...]):
    """Exact distance between U and V by BFS ("inf" if disconnected)."""
    params = GraphParams(n=n, m=m)
    fault_set = FaultSet.of(params, _faults(faults, params))
    distance = bfs_distance(params, _vertex(u, params), _vertex(v, params), fault_set)
    click.echo(format_value(distance))


@cli.command()
@instance_options
@faults_option
@json_option
def diam(n: int, m: int, faults: Tuple[str, ...], as_json: bool):
    """Exact diameter, optionally with faulty vertices removed."""
    params = GraphParams(n=n, m=m)
    report = exact_diameter(params, FaultSet.of(params, _faults(faults, params)))
    if as_json:
        _dump(report.to_dict())
    else:
        click.echo(format_value(report.value))


@cli.command("fault-diam")
@instance_options
@click.option("--omega", type=int, required=True, help="Width; fewer than omega faults")
@click.option("--exhaustive", is_flag=True, help="Enumerate every fault-set size below omega")
@click.option("--workers", type=int, default=None, help="Worker processes (default: config)")
@json_option
def fault_diam(n: int, m: int, omega: int, exhaustive: bool, workers: Optional[int], as_json: bool):
    """Exact (omega-1)-fault diameter by fault-set enumeration."""
    params = GraphParams(n=n, m=m)
    report = exact_fault_diameter(
        params, omega, exhaustive=exhaustive, workers=workers or get_config().workers
    )
    if as_json:
        _dump(report.to_dict())
    else:
        click.echo(format_value(report.value))


@cli.command("wide-diam")
@instance_options
@click.option("--omega", type=int, required=True, help="Number of disjoint paths")
@click.option("--budget", type=int, default=None, help="Node expansions per pair (default: config)")
@json_option
def wide_diam(n: int, m: int, omega: int, budget: Optional[int], as_json: bool):
    """Exact omega-wide diameter by bounded disjoint-path search."""
    report = exact_wide_diameter(GraphParams(n=n, m=m), omega, budget=budget)
    if as_json:
        _dump(report.to_dict())
    else:
        click.echo(format_value(report.value))


@cli.command()
@click.option("--grid", default=None, help="Instances as n1..n2,m1..m2 (default: config)")
@click.option("--seed", type=int, default=None, help="Pair-sampling seed")
@click.option("--pair-budget", type=int, default=None, help="Sampled pairs on large instances")
@click.option("--budget", type=int, default=None, help="Node expansions per wide-diameter pair")
@click.option("--workers", type=int, default=None, help="Worker processes across instances")
@click.option(
    "--format", "output_format", default="table",
    type=click.Choice(["table", "jsonl"]), help="Report format"
)
@click.option("--no-embeddings", is_flag=True, help="Skip the mesh and tripy isomorphism claims")
@click.option("--metrics-file", type=click.Path(dir_okay=False), default=None,
              help="Write Prometheus text metrics here after the run")
@click.pass_context
def verify(
    ctx: click.Context,
    grid: Optional[str],
    seed: Optional[int],
    pair_budget: Optional[int],
    budget: Optional[int],
    workers: Optional[int],
    output_format: str,
    no_embeddings: bool,
    metrics_file: Optional[str],
):
    """Run the verification campaign; exit 2 if any claim fails."""
    settings = CampaignSettings.from_config(
        get_config(),
        grid=grid,
        seed=seed,
        pair_budget=pair_budget,
        search_budget=budget,
        workers=workers,
        embeddings=not no_embeddings,
    )
    report = run_campaign(settings)

    if output_format == "jsonl":
        click.echo(report.to_jsonl())
    else:
        console = Console(width=CONSOLE_WIDTH, color_system=None, highlight=False)
        report.render_table(console)

    if metrics_file:
        metrics.write_metrics(metrics_file)
        logger.info(f"Metrics written to {metrics_file}", totals=get_metrics_summary())
    if report.failed:
        ctx.exit(EXIT_CLAIM_FAILED)


@cli.command("map")
@click.option(
    "--from", "source", required=True, type=click.Choice(["mesh", "tripy"]),
    help="Source graph: triangular mesh (x,y) or tripy (k:x,y)"
)
@click.option("-m", "m", type=int, required=True, help="Mesh side m, or tripy levels L")
@click.argument("vertex")
def map_vertex(source: str, m: int, vertex: str):
    """Image of a mesh or tripy vertex in T_m^2 or T_L^3."""
    if source == "mesh":
        image = sigma1(parse_mesh_vertex(vertex, m), m)
    else:
        image = sigma2(parse_tripy_vertex(vertex, m), m)
    click.echo(str(image))


@cli.command()
@instance_options
@click.option(
    "--format", "output_format", default="edges",
    type=click.Choice(["dot", "edges", "json"]), help="Output format"
)
def export(n: int, m: int, output_format: str):
    """Export T_m^n as DOT, an edge list, or JSON."""
    params = GraphParams(n=n, m=m)
    renderers = {"dot": to_dot, "edges": to_edge_list, "json": to_json}
    click.echo(renderers[output_format](params))


def _report_error(error: str, message: str) -> None:
    click.echo(json.dumps({"error": error, "message": message}), err=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Invoke the CLI and return its exit code instead of exiting.

    Usage errors map to 1; SimplexError maps to its own exit_code.
    """
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="simplex",
            standalone_mode=False,
        )
    except click.UsageError as exc:
        _report_error("UsageError", exc.format_message())
        return EXIT_USAGE
    except click.ClickException as exc:
        _report_error(type(exc).__name__, exc.format_message())
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except ValidationError as exc:
        _report_error("ValidationError", str(exc.errors()[0]["msg"]))
        return EXIT_USAGE
    except SimplexError as exc:
        click.echo(json.dumps(exc.to_dict()), err=True)
        return exc.exit_code
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())

# supersat/cli.py
from __future__ import annotations

import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Sequence

import click

from supersat.constants.families import FAMILY_PARAMETERS
from supersat.errors import SupersatError
from supersat.models import Graph, VertexPartition
from supersat.services.campaign_service import CAMPAIGN_NAMES, CAMPAIGNS, parse_campaign_file, run_campaign
from supersat.services.pattern_service import load_pattern
from supersat.services.report_service import CNF_METHODS, DISTANCE_TARGETS, ReportService
from supersat.settings import Config
from supersat.utils.formatters import FORMATS, render
from supersat.utils.graph_io import GRAPH_FORMATS, read_graph, save_graph
from supersat.utils.request_parsers import parse_edge, parse_int_list, parse_parts

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_EXIT = 2


# ======================
# Helpers
# ======================
def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _read_graph_arg(source: click.File, fmt: str | None) -> Graph:
    return read_graph(source.read(), fmt)


def _emit(ctx: click.Context, payload: Any, output: str | None = None) -> None:
    text = render(payload, ctx.obj["format"])
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", output)
    else:
        click.echo(text, nl=False)


def _int_list(value: str | None, name: str) -> list[int] | None:
    try:
        return parse_int_list(value)
    except SupersatError as exc:
        raise click.BadParameter(str(exc), param_hint=name) from exc


graph_argument = click.argument("graph", type=click.File("r", encoding="ascii"))
graph_format_option = click.option(
    "--graph-format", type=click.Choice(GRAPH_FORMATS), default=None, help="Input graph format (auto-detected)."
)
output_option = click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Write here.")
override_option = click.option("--override", is_flag=True, help="Ignore size guardrails.")


# ======================
# Command group
# ======================
@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for every randomized step.")
@click.option("--workers", type=int, envvar="SUPERSAT_WORKERS", default=None,
              help="Campaign worker processes (default: available cores).")
@click.option("--log-level", default=None, help="Logging level (default: SUPERSAT_LOG_LEVEL).")
@click.pass_context
def cli(ctx: click.Context, fmt: str, seed: int, workers: int | None, log_level: str | None) -> None:
    """Spectral extremal graph theory toolkit."""
    _configure_logging(log_level or Config.LOG_LEVEL)
    if workers is not None and workers < 1:
        raise click.BadParameter("must be at least 1", param_hint="--workers")
    ctx.obj = {"format": fmt, "seed": seed, "workers": workers}


@cli.command()
@graph_argument
@graph_format_option
@click.option("--vector/--no-vector", default=True, show_default=True, help="Include the Perron vector.")
@output_option
@click.pass_context
def spectral(ctx, graph, graph_format, vector, output):
    """Spectral radius, Perron vector, Phi and light edges of GRAPH."""
    _emit(ctx, ReportService.spectral(_read_graph_arg(graph, graph_format), include_vector=vector), output)


@cli.command()
@graph_argument
@graph_format_option
@click.option("--pattern", "pattern_ref", required=True, help="Registry name or pattern file.")
@click.option("--edge", default=None, help="Count only copies through this edge, e.g. 0,1.")
@click.option("--partition", default=None, help="Parts like 0,1,2|3,4,5: the edge must be the only intra-part edge.")
@override_option
@output_option
@click.pass_context
def count(ctx, graph, graph_format, pattern_ref, edge, partition, override, output):
    """Copies of a pattern in GRAPH (N_F), optionally through one edge."""
    host = _read_graph_arg(graph, graph_format)
    try:
        parsed_edge = parse_edge(edge)
        parts = parse_parts(partition)
    except SupersatError as exc:
        raise click.BadParameter(str(exc)) from exc
    payload = ReportService.count(
        host,
        load_pattern(pattern_ref, override=override),
        parsed_edge,
        VertexPartition.from_parts(parts) if parts else None,
        override=override,
    )
    _emit(ctx, payload, output)


@cli.command()
@click.option("--pattern", "pattern_ref", required=True, help="Registry name or pattern file.")
@click.option("--n", "n", type=int, default=None, help="Number of vertices.")
@click.option("--method", type=click.Choice(CNF_METHODS), default="both", show_default=True)
@click.option("--n-values", default=None, help="n values for --method scan, e.g. 6,9,12 or 6..30.")
@override_option
@output_option
@click.pass_context
def cnf(ctx, pattern_ref, n, method, n_values, override, output):
    """c(n, F): exact formula, brute force on T_{n,r} plus one edge, alpha or a residual scan."""
    profile = load_pattern(pattern_ref, override=override)
    values = _int_list(n_values, "--n-values")
    _emit(ctx, ReportService.cnf(profile, n, method, values, override=override), output)


@cli.command()
@click.option("--name", "pattern_ref", required=True, help="Registry name or pattern file.")
@click.option("--colorings/--no-colorings", default=True, show_default=True)
@override_option
@output_option
@click.pass_context
def pattern(ctx, pattern_ref, colorings, override, output):
    """Chromatic number, good edges, colorings, |Aut| and beta' of a pattern."""
    _emit(ctx, ReportService.pattern(load_pattern(pattern_ref, override=override), colorings), output)


@cli.command()
@graph_argument
@graph_format_option
@click.option("--epsilon", type=float, required=True)
@click.option("--a", "a", type=float, default=None, help="Growth constant for the invariant checks.")
@output_option
@click.pass_context
def peel(ctx, graph, graph_format, epsilon, a, output):
    """Peel light edges off GRAPH and check the peeling invariants."""
    _emit(ctx, ReportService.peel(_read_graph_arg(graph, graph_format), epsilon, a), output)


@cli.command()
@click.option("--family", required=True, help="turan, turan-plus-edge, complete-multipartite, book, ...")
@click.option("--n", "n", type=int, default=None)
@click.option("--r", "r", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--a", "a", type=int, default=None)
@click.option("--b", "b", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.option("--sizes", default=None, help="Part sizes for complete-multipartite, e.g. 2,3,3.")
@click.option("--graph-format", "out_format", type=click.Choice(GRAPH_FORMATS), default="edgelist",
              show_default=True)
@output_option
@click.pass_context
def construct(ctx, family, n, r, k, a, b, m, sizes, out_format, output):
    """Build a named construction; -o writes the graph file, otherwise the report is printed."""
    if family not in FAMILY_PARAMETERS:
        raise click.BadParameter(f"expected one of {', '.join(FAMILY_PARAMETERS)}", param_hint="--family")
    given = {"n": n, "r": r, "k": k, "a": a, "b": b, "m": m}
    names = FAMILY_PARAMETERS[family]
    if names == ("sizes",):
        parameters = _int_list(sizes, "--sizes") or []
        if not parameters:
            raise click.BadParameter("needs --sizes", param_hint="--sizes")
    else:
        missing = [name for name in names if given[name] is None]
        if missing:
            raise click.UsageError(f"{family} needs " + ", ".join(f"--{name}" for name in missing))
        parameters = [given[name] for name in names]

    payload = ReportService.construct(family, parameters)
    if output:
        graph = Graph.from_edges(payload["graph"]["n"], payload["graph"]["edges"])
        save_graph(graph, output, out_format)
        logger.info("wrote %s (%s)", output, payload["family"])
        return
    _emit(ctx, payload)


@cli.command()
@graph_argument
@graph_format_option
@click.option("--target", type=click.Choice(DISTANCE_TARGETS), default="turan", show_default=True)
@click.option("--r", "r", type=int, default=2, show_default=True)
@click.option("--mode", type=click.Choice(("exact", "heuristic")), default="exact", show_default=True)
@click.option("--starts", type=int, default=None, help="Local-search restarts (heuristic mode).")
@override_option
@output_option
@click.pass_context
def distance(ctx, graph, graph_format, target, r, mode, starts, override, output):
    """Edit distance from GRAPH to a Turán graph or a complete bipartite graph."""
    payload = ReportService.distance(
        _read_graph_arg(graph, graph_format), target, r, mode,
        seed=ctx.obj["seed"], starts=starts, workers=ctx.obj["workers"], override=override,
    )
    _emit(ctx, payload, output)


@cli.command()
@click.argument("spec_file", required=False, type=click.File("r", encoding="utf-8"))
@click.option("--name", "name", type=click.Choice(CAMPAIGN_NAMES), default=None,
              help="Run a campaign without a spec file.")
@click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Grid value (repeatable).")
@override_option
@output_option
@click.pass_context
def campaign(ctx, spec_file, name, assignments, override, output):
    """Run a verification campaign. Exit status 2 when a counterexample is found."""
    if (spec_file is None) == (name is None):
        raise click.UsageError("give either SPEC_FILE or --name")
    lines = [spec_file.read()] if spec_file is not None else [f"campaign = {name}"]
    for item in assignments:
        if "=" not in item:
            raise click.BadParameter(f"expected KEY=VALUE, got {item!r}", param_hint="--set")
        lines.append(item)
    spec = parse_campaign_file("\n".join(lines))

    updates: dict[str, Any] = {"override": spec.override or override}
    if ctx.obj["workers"] is not None:
        updates["workers"] = ctx.obj["workers"]
    definition = CAMPAIGNS.get(spec.name)
    if not spec.seeds and definition is not None and definition.default_seeds:
        start = ctx.obj["seed"]
        updates["seeds"] = tuple(range(start, start + len(definition.default_seeds)))

    spec = replace(spec, **updates)

    report = run_campaign(spec)
    _emit(ctx, report, output or spec.output)
    summary = report.summary
    click.echo(
        f"{spec.name}: {summary['instances']} checked, {summary['failed']} counterexample(s), "
        f"{summary['findings']} finding(s)",
        err=True,
    )
    if not report.passed:
        ctx.exit(COUNTEREXAMPLE_EXIT)


@cli.command(name="enumerate")
@click.option("--max-n", type=int, required=True, help="Vertex bound.")
@click.option("--m", "m", type=int, required=True, help="Edge count.")
@click.option("--labeled", is_flag=True, help="All labelled edge sets on 0..max_n-1 instead of iso classes.")
@override_option
@output_option
@click.pass_context
def enumerate_command(ctx, max_n, m, labeled, override, output):
    """Graphs with m edges on at most max_n vertices, as graph6 strings."""
    _emit(ctx, ReportService.enumerate(max_n, m, labeled, override=override), output)


# ======================
# Entry point
# ======================
def run(argv: Sequence[str] | None = None) -> int:
    """Exit status: 0 success, 1 usage or runtime error, 2 counterexample found."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="supersat", standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        if exc.ctx is not None:
            click.echo(exc.ctx.get_usage(), err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except SupersatError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return rv if isinstance(rv, int) else 0

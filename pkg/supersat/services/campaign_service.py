# supersat/services/campaign_service.py
from __future__ import annotations

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

import networkx as nx
import numpy as np

from supersat.config import check_guardrail, setting
from supersat.errors import SupersatError
from supersat.models import CampaignRecord, CampaignReport, CampaignSpec, CheckStatus, Graph, TerminalReason
from supersat.services import graph_core
from supersat.services.counting_service import alpha_exact, c_exact, c_value, contains_copy, count_copies
from supersat.services.pattern_service import named_profile
from supersat.services.spectral_service import (
    check_light_free_bounds,
    check_peel_growth,
    check_perturbation_bound,
    check_step_bound,
    peel,
    spectral_radius,
)
from supersat.utils.formatters import render
from supersat.utils.graph_io import write_graph6
from supersat.utils.request_parsers import parse_bool, parse_float, parse_float_list, parse_int, parse_int_list
from supersat.utils.time_helpers import utc_timestamp

logger = logging.getLogger(__name__)

Outcome = dict[str, Any] | None


# =========================================================
# Campaign definitions
# =========================================================
@dataclass(frozen=True)
class CampaignPlan:
    payloads: list[tuple]
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CampaignDefinition:
    name: str
    description: str
    grid: dict[str, tuple[Callable[[Any], Any], Any]]
    plan: Callable[[dict[str, Any], tuple[int, ...], bool, float], CampaignPlan]
    evaluate: Callable[[tuple], Outcome]
    default_seeds: tuple[int, ...] = ()

    def resolve_grid(self, raw: dict[str, Any]) -> dict[str, Any]:
        unknown = sorted(set(raw) - set(self.grid))
        if unknown:
            raise SupersatError(
                f"campaign {self.name!r} does not take {', '.join(unknown)}; known keys: {', '.join(self.grid)}"
            )
        resolved = {}
        for key, (parser, default) in self.grid.items():
            if key not in raw or raw[key] is None or str(raw[key]).strip() == "":
                resolved[key] = default
                continue
            value = parser(raw[key])
            if value is None:
                raise SupersatError(f"invalid value for {key}: {raw[key]!r}")
            resolved[key] = value
        return resolved


def _text(value: Any) -> str | None:
    s = str(value).strip()
    return s or None


def _graph_label(graph: Graph) -> str:
    return f"m={graph.m} n={graph.n} g6={write_graph6(graph).strip()}"


def _record(instance: str, status: str, margin: float | None = None, *, vacuous: bool = False,
            note: str = "", **values: Any) -> dict[str, Any]:
    return {"instance": instance, "status": status, "margin": margin, "vacuous": vacuous, "note": note,
            "values": values}


def _check_max_m(max_m: int, override: bool) -> None:
    if max_m < 1:
        raise SupersatError(f"max_m must be at least 1, got {max_m}")
    check_guardrail("CAMPAIGN_MAX_M", max_m, override=override, what="max_m")


def _exhaustive_plan(max_m: int, override: bool, make_payload: Callable[[Graph], tuple]) -> CampaignPlan:
    """Every graph with 1..max_m edges and no isolated vertices (2m vertices suffice for m edges)."""
    _check_max_m(max_m, override)
    payloads: list[tuple] = []
    enumerated: dict[int, int] = {}
    for m, reps in graph_core.enumerate_graph_levels(2 * max_m, max_m, override=True):
        if m == 0:
            continue
        enumerated[m] = len(reps)
        payloads.extend(make_payload(g) for g in reps)
    return CampaignPlan(payloads, {"enumerated": enumerated, "enumerated_total": sum(enumerated.values())})


# ----------------------
# Edge-spectral bound on K_{r+1}-free graphs
# ----------------------
def _plan_nikiforov(grid, seeds, override, slack) -> CampaignPlan:
    r = grid["r"]
    if r < 2:
        raise SupersatError(f"r must be at least 2, got {r}")
    return _exhaustive_plan(grid["max_m"], override, lambda g: (g, r, slack))


def _evaluate_nikiforov(payload: tuple) -> Outcome:
    graph, r, slack = payload
    if contains_copy(graph, graph_core.build_clique(r + 1).graph):
        return None
    rho = spectral_radius(graph).rho
    bound = math.sqrt((1 - 1 / r) * 2 * graph.m)
    margin = bound - rho
    equality = abs(margin) <= slack
    if r == 2:
        family = graph_core.is_complete_bipartite(graph)
    else:
        family = graph_core.is_regular_complete_multipartite(graph, r)
    failed = margin < -slack or equality != family
    note = ""
    if equality and family:
        note = "equality on the extremal family"
    elif equality != family:
        note = "equality case outside the extremal family" if equality else "extremal family misses equality"
    return _record(_graph_label(graph), "fail" if failed else "pass", margin, note=note,
                   rho=rho, bound=bound, equality=equality, extremal_family=family, near_equality=equality)


# ----------------------
# Triangle count under rho >= sqrt(m)
# ----------------------
def _plan_spectral_triangles(grid, seeds, override, slack) -> CampaignPlan:
    return _exhaustive_plan(grid["max_m"], override, lambda g: (g, slack))


def _evaluate_spectral_triangles(payload: tuple) -> Outcome:
    graph, slack = payload
    rho = spectral_radius(graph).rho
    if rho < math.sqrt(graph.m) - slack or graph_core.is_complete_bipartite(graph):
        return None
    bound = (isqrt(graph.m) - 1) // 2
    triangles = count_copies(graph, named_profile("K3"))
    vacuous = bound == 0
    return _record(_graph_label(graph), "pass" if triangles >= bound else "fail", float(triangles - bound),
                   vacuous=vacuous, note="bound is 0" if vacuous else "",
                   rho=rho, triangles=triangles, bound=bound)


# ----------------------
# Triangles against rho (rho^2 - m) / 3
# ----------------------
def _plan_bollobas_nikiforov(grid, seeds, override, slack) -> CampaignPlan:
    return _exhaustive_plan(grid["max_m"], override, lambda g: (g, slack))


def _evaluate_bollobas_nikiforov(payload: tuple) -> Outcome:
    graph, slack = payload
    rho = spectral_radius(graph).rho
    bound = rho * (rho * rho - graph.m) / 3
    triangles = count_copies(graph, named_profile("K3"))
    margin = triangles - bound
    return _record(_graph_label(graph), "pass" if margin >= -slack else "fail", margin,
                   vacuous=bound <= 0, rho=rho, triangles=triangles, bound=bound)


# ----------------------
# Book graphs and the (1 + sqrt(4m - 3))/2 threshold
# ----------------------
def _plan_book(grid, seeds, override, slack) -> CampaignPlan:
    return _exhaustive_plan(grid["max_m"], override, lambda g: (g, slack))


def _is_book(graph: Graph) -> bool:
    if graph.m % 2 == 0:
        return False
    pages = (graph.m - 1) // 2
    expected = graph_core.build_book(pages).graph if pages else graph_core.build_clique(2).graph
    return graph_core.are_isomorphic(graph.normalize(), expected)


def _evaluate_book(payload: tuple) -> Outcome:
    graph, slack = payload
    rho = spectral_radius(graph).rho
    threshold = (1 + math.sqrt(4 * graph.m - 3)) / 2
    if rho < threshold - slack:
        return None
    triangles = count_copies(graph, named_profile("K3"))
    needed = Fraction(graph.m - 1, 2)
    book = _is_book(graph)
    if triangles < needed:
        status, note = "finding", "fewer than (m-1)/2 triangles"
    elif triangles == needed and not book:
        status, note = "finding", "equality outside the book family"
    else:
        status, note = "pass", "book" if book else ""
    return _record(_graph_label(graph), status, float(triangles - needed), note=note,
                   rho=rho, threshold=threshold, triangles=triangles, needed=needed, book=book)


# ----------------------
# Tightness of T*_{n,r}
# ----------------------
def _plan_tightness(grid, seeds, override, slack) -> CampaignPlan:
    r, pattern = grid["r"], grid["pattern"]
    profile = named_profile(pattern)
    if r < 3:
        raise SupersatError(f"r must be at least 3, got {r}")
    if not profile.is_color_critical or profile.chi != r + 1:
        raise SupersatError(f"{pattern} must be color-critical with chromatic number {r + 1}")
    for n in grid["n_values"]:
        if n % r or n // r < 2:
            raise SupersatError(f"n = {n} must be a multiple of r = {r} with n/r >= 2")
    return CampaignPlan([(r, pattern, n) for n in grid["n_values"]])


def _evaluate_tightness(payload: tuple) -> Outcome:
    r, pattern, n = payload
    profile = named_profile(pattern)
    graph = graph_core.build_turan_plus_edge(n, r).graph
    rho = spectral_radius(graph).rho
    bound = math.sqrt((1 - 1 / r) * 2 * graph.m)
    margin = rho - bound
    copies = count_copies(graph, profile)
    formula = c_exact(n, profile)
    exponent = (profile.f - 2) / 2
    ratio = copies / graph.m**exponent
    target = (2 * r / (r - 1)) ** exponent * float(alpha_exact(profile))
    ok = margin > 0 and copies == formula
    return _record(f"T*_{{{n},{r}}} F={pattern}", "pass" if ok else "fail", margin,
                   n=n, m=graph.m, rho=rho, bound=bound, copies=copies, c_exact=formula,
                   ratio=ratio, limit=target, ratio_to_limit=ratio / target)


# ----------------------
# Peeling invariants on random graphs
# ----------------------
def _plan_peel(grid, seeds, override, slack) -> CampaignPlan:
    a, eps = grid["a"], grid["epsilon"]
    if not 0.81 <= a <= 2:
        raise SupersatError(f"a must lie in [0.81, 2], got {a}")
    sizes, probabilities, parts = grid["n_values"], grid["p_values"], grid["parts"]
    if not sizes or not probabilities or not parts:
        raise SupersatError("n_values, p_values and parts must be nonempty")
    payloads = []
    for i, seed in enumerate(seeds):
        n = sizes[i % len(sizes)]
        if seed % 2 == 0:
            model = ("gnp", probabilities[(i // 2) % len(probabilities)])
        else:
            model = ("planted", parts[(i // 2) % len(parts)])
        payloads.append((seed, n, model, grid["noise"], a, eps, slack))
    return CampaignPlan(payloads)


def random_instance(seed: int, n: int, model: tuple[str, float], noise: float) -> Graph:
    """G(n, p), or a near-balanced complete multipartite graph with each pair flipped at rate `noise`."""
    kind, parameter = model
    if kind == "gnp":
        return Graph.from_networkx(nx.gnp_random_graph(n, float(parameter), seed=seed))
    rng = np.random.default_rng(seed)
    parts = int(parameter)
    labels = np.arange(n) % parts
    cross = labels[:, None] != labels[None, :]
    flips = rng.random((n, n)) < noise
    present = np.triu(cross ^ flips, k=1)
    rows, cols = np.nonzero(present)
    return Graph(n, frozenset(zip(rows.tolist(), cols.tolist())))


def _evaluate_peel(payload: tuple) -> Outcome:
    seed, n, model, noise, a, eps, slack = payload
    graph = random_instance(seed, n, model, noise)
    label = f"seed={seed} n={n} model={model[0]}:{model[1]}"
    if graph.m == 0:
        return _record(label, "skipped", note="no edges")
    rho = spectral_radius(graph).rho
    if rho < math.sqrt(a * graph.m):
        return _record(label, "skipped", note="rho < sqrt(a*m)", m=graph.m, rho=rho)

    trace = peel(graph, eps)
    checks = [check_peel_growth(trace, a, slack), check_step_bound(trace, slack)]
    if trace.terminal_reason is TerminalReason.NO_LIGHT_EDGES and a > 1 and trace.terminal is not None:
        checks.append(check_light_free_bounds(trace.terminal.normalize(), None, a, slack))
    failed = [c.check for c in checks if c.status is CheckStatus.FAIL]
    margins = [v for c in checks[:2] for v in c.margins.values()]
    return _record(
        label,
        "fail" if failed else "pass",
        min(margins) if margins else None,
        note=", ".join(failed),
        m=graph.m,
        rho=rho,
        steps=trace.length,
        terminal_reason=trace.terminal_reason,
        checks={c.check: c.status.value for c in checks},
    )


# ----------------------
# Copy counts just above the Turán number
# ----------------------
def _plan_mubayi(grid, seeds, override, slack) -> CampaignPlan:
    r, pattern = grid["r"], grid["pattern"]
    profile = named_profile(pattern)
    if profile.chi != r + 1 or not profile.is_color_critical:
        raise SupersatError(f"{pattern} must be color-critical with chromatic number {r + 1}")
    payloads = []
    for n in grid["n_values"]:
        check_guardrail("SWEEP_MAX_N", n, override=override, what="n")
        for q in grid["q_values"]:
            check_guardrail("SWEEP_MAX_Q", q, override=override, what="q")
            payloads.append((r, pattern, n, q))
    return CampaignPlan(payloads)


def _evaluate_mubayi(payload: tuple) -> Outcome:
    r, pattern, n, q = payload
    profile = named_profile(pattern)
    edges = graph_core.turan_edge_count(n, r) + q
    label = f"n={n} q={q} F={pattern}"
    if edges > n * (n - 1) // 2:
        return _record(label, "skipped", note="edge count exceeds C(n,2)", n=n, q=q)
    c, method = c_value(n, profile)
    graphs = 0
    smallest: int | None = None
    for graph in graph_core.enumerate_graphs_on(n, edges, override=True):
        graphs += 1
        copies = count_copies(graph, profile)
        smallest = copies if smallest is None else min(smallest, copies)
    target = q * c
    status = "pass" if smallest is not None and smallest >= target else "finding"
    return _record(label, status, float((smallest or 0) - target),
                   note="" if status == "pass" else "minimum below q*c(n,F) at this n",
                   n=n, q=q, edges=edges, graphs=graphs, minimum=smallest, c=c, c_method=method, target=target)


# ----------------------
# Partial Turán graphs
# ----------------------
def _plan_partial_turan(grid, seeds, override, slack) -> CampaignPlan:
    return CampaignPlan([(m, r, slack) for r in grid["r_values"] for m in grid["m_values"]])


def _evaluate_partial_turan(payload: tuple) -> Outcome:
    m, r, slack = payload
    label = f"m={m} r={r}"
    if r < 2 or m < max(1, r * (r - 1) // 2):
        return _record(label, "skipped", note="m below e(T_{r,r})", m=m, r=r)
    built = graph_core.build_partial_turan(m, r)
    graph = built.graph
    base_n = graph.n - (1 if built.added_edges else 0)
    free = not contains_copy(graph, graph_core.build_clique(r + 1).graph)
    rho = spectral_radius(graph).rho
    lower = (r - 1) * (base_n // r)
    upper = math.sqrt((1 - 1 / r) * 2 * m)
    margin = min(rho - lower, upper - rho)
    ok = free and margin >= -slack
    return _record(label, "pass" if ok else "fail", margin, near_equality=abs(upper - rho) <= slack,
                   n=graph.n, base_n=base_n, clique_free=free, rho=rho, lower=lower, upper=upper)


# ----------------------
# Perturbed complete multipartite graphs
# ----------------------
def _plan_perturbation(grid, seeds, override, slack) -> CampaignPlan:
    sizes, total, k = grid["sizes"], grid["max_total"], grid["k"]
    payloads = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        a1 = int(rng.integers(0, total + 1))
        a2 = int(rng.integers(0, total - a1 + 1))
        payloads.append((tuple(sizes), a1, a2, k, seed, slack))
    return CampaignPlan(payloads)


def _evaluate_perturbation(payload: tuple) -> Outcome:
    sizes, a1, a2, k, seed, slack = payload
    report = check_perturbation_bound(sizes, a1, a2, k=k, seed=seed, slack=slack)
    holds = report.details["inequality_holds"]
    note = "size hypotheses not met; inequality evaluated" if not report.hypothesis_met else ""
    return _record(
        f"seed={seed} a1={a1} a2={a2}" + (f" k={k}" if k is not None else ""),
        "pass" if holds else "fail",
        report.margins["bound"],
        note=note,
        check=report.check,
        hypothesis_met=report.hypothesis_met,
        **{key: report.details[key] for key in ("rho_G", "rhs")},
    )


CAMPAIGNS: dict[str, CampaignDefinition] = {
    d.name: d
    for d in (
        CampaignDefinition(
            "nikiforov", "rho <= sqrt((1-1/r) 2m) on every K_{r+1}-free graph, equality only on the extremal family",
            {"max_m": (parse_int, 9), "r": (parse_int, 2)},
            _plan_nikiforov, _evaluate_nikiforov,
        ),
        CampaignDefinition(
            "spectral-triangles", "rho >= sqrt(m) and not complete bipartite => at least floor((sqrt(m)-1)/2) triangles",
            {"max_m": (parse_int, 9)},
            _plan_spectral_triangles, _evaluate_spectral_triangles,
        ),
        CampaignDefinition(
            "bollobas-nikiforov", "triangles >= rho (rho^2 - m) / 3 on every graph",
            {"max_m": (parse_int, 9)},
            _plan_bollobas_nikiforov, _evaluate_bollobas_nikiforov,
        ),
        CampaignDefinition(
            "book-conjecture", "rho >= (1+sqrt(4m-3))/2 against (m-1)/2 triangles (exploratory)",
            {"max_m": (parse_int, 9)},
            _plan_book, _evaluate_book,
        ),
        CampaignDefinition(
            "tightness", "T*_{n,r} beats sqrt((1-1/r) 2m) and holds exactly c(n,F) copies",
            {"r": (parse_int, 3), "pattern": (_text, "K4"), "n_values": (parse_int_list, [6, 9, 12, 30, 60])},
            _plan_tightness, _evaluate_tightness,
        ),
        CampaignDefinition(
            "peel-properties", "peeling invariants on seeded random graphs with rho >= sqrt(a m)",
            {
                "a": (parse_float, 1.2),
                "epsilon": (parse_float, 0.5),
                "n_values": (parse_int_list, [10, 20, 30, 40, 50, 60]),
                "p_values": (parse_float_list, [0.3, 0.5, 0.8]),
                "parts": (parse_int_list, [2, 3, 4]),
                "noise": (parse_float, 0.05),
            },
            _plan_peel, _evaluate_peel, tuple(range(1000)),
        ),
        CampaignDefinition(
            "mubayi-sweep", "min N_F over n-vertex graphs with e(T_{n,r}) + q edges against q c(n,F) (exploratory)",
            {
                "r": (parse_int, 2),
                "pattern": (_text, "K3"),
                "n_values": (parse_int_list, [6, 7, 8]),
                "q_values": (parse_int_list, [1]),
            },
            _plan_mubayi, _evaluate_mubayi,
        ),
        CampaignDefinition(
            "partial-turan", "partial Turán graphs are K_{r+1}-free with (r-1)floor(n/r) <= rho <= sqrt((1-1/r) 2m)",
            {"m_values": (parse_int_list, list(range(1, 41))), "r_values": (parse_int_list, [2, 3, 4])},
            _plan_partial_turan, _evaluate_partial_turan,
        ),
        CampaignDefinition(
            "perturbation", "spectral radius after a few class-edge additions and cross-edge deletions",
            {"sizes": (parse_int_list, [100, 100, 100]), "max_total": (parse_int, 3), "k": (parse_int, None)},
            _plan_perturbation, _evaluate_perturbation, tuple(range(50)),
        ),
    )
}

CAMPAIGN_NAMES = tuple(CAMPAIGNS)


# =========================================================
# Execution
# =========================================================
def _evaluate_task(task: tuple[str, tuple]) -> Outcome:
    name, payload = task
    return CAMPAIGNS[name].evaluate(payload)


def _execute(name: str, payloads: Sequence[tuple], workers: int) -> list[Outcome]:
    tasks = [(name, p) for p in payloads]
    if workers <= 1 or len(tasks) < 2:
        return [_evaluate_task(t) for t in tasks]
    chunksize = max(1, len(tasks) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps instance order
        return list(pool.map(_evaluate_task, tasks, chunksize=chunksize))


def _summarize(records: Sequence[CampaignRecord], filtered: int, extras: dict[str, Any]) -> dict[str, Any]:
    statuses = Counter(r.status for r in records)
    margins = [r.margin for r in records if r.margin is not None and r.status in ("pass", "fail")]
    counterexamples = [r.index for r in records if r.status == "fail"]
    summary: dict[str, Any] = {
        "instances": len(records),
        "filtered": filtered,
        "passed": statuses["pass"],
        "failed": statuses["fail"],
        "skipped": statuses["skipped"],
        "findings": statuses["finding"],
        "vacuous": sum(1 for r in records if r.vacuous),
        "near_equalities": sum(1 for r in records if r.values.get("near_equality")),
        "min_margin": min(margins) if margins else None,
        "counterexamples": counterexamples,
        "pass": not counterexamples,
    }
    if "enumerated_total" in extras:
        extras = dict(extras, consistent=len(records) + filtered == extras["enumerated_total"])
    summary.update(extras)
    return summary


def run_campaign(spec: CampaignSpec) -> CampaignReport:
    definition = CAMPAIGNS.get(spec.name)
    if definition is None:
        raise SupersatError(f"unknown campaign {spec.name!r}; expected one of {', '.join(CAMPAIGN_NAMES)}")
    grid = definition.resolve_grid(spec.grid)
    seeds = tuple(spec.seeds) or definition.default_seeds
    slack = float(setting("CAMPAIGN_SLACK"))
    workers = int(spec.workers if spec.workers is not None else setting("WORKERS"))

    plan = definition.plan(grid, seeds, spec.override, slack)
    logger.info("campaign %s: %d instances on %d worker(s)", spec.name, len(plan.payloads), workers)
    outcomes = _execute(spec.name, plan.payloads, workers)

    records: list[CampaignRecord] = []
    filtered = 0
    for outcome in outcomes:
        if outcome is None:
            filtered += 1
            continue
        record = CampaignRecord(index=len(records), **outcome)
        if record.values.get("near_equality"):
            logger.warning("campaign %s: near-equality within slack at %s", spec.name, record.instance)
        if record.status == "fail":
            logger.warning("campaign %s: counterexample at %s", spec.name, record.instance)
        records.append(record)

    report_grid = dict(grid, slack=slack)
    if definition.default_seeds:
        report_grid["seeds"] = list(seeds)
    return CampaignReport(
        campaign=spec.name,
        grid=report_grid,
        records=tuple(records),
        summary=_summarize(records, filtered, plan.extras),
        generated_at=utc_timestamp(),
    )


# =========================================================
# Campaign files and reports
# =========================================================
def parse_campaign_file(text: str) -> CampaignSpec:
    """Flat `key = value` lines; `#` starts a comment. `campaign` is required."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SupersatError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key in values:
            raise SupersatError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value
    return spec_from_mapping(values)


def spec_from_mapping(values: dict[str, Any]) -> CampaignSpec:
    values = dict(values)
    name = values.pop("campaign", None) or values.pop("name", None)
    if not name:
        raise SupersatError("campaign spec needs a 'campaign' key")
    seeds = parse_int_list(values.pop("seeds", None)) or []
    workers_raw = values.pop("workers", None)
    workers = parse_int(workers_raw)
    if workers_raw not in (None, "") and workers is None:
        raise SupersatError(f"invalid workers value {workers_raw!r}")
    override = parse_bool(values.pop("override", None)) or False
    output = values.pop("output", None) or None
    return CampaignSpec(str(name).strip(), values, tuple(seeds), output, workers, override)


def report_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return {".csv": "csv", ".txt": "text"}.get(suffix, "json")


def write_report(report: CampaignReport, path: str | Path, fmt: str | None = None) -> None:
    Path(path).write_text(render(report, fmt or report_format(path)), encoding="utf-8")


# =========================================================
# Named entry points
# =========================================================
def _run(name: str, seeds: Iterable[int] = (), workers: int | None = None, override: bool = False,
         **grid: Any) -> CampaignReport:
    return run_campaign(CampaignSpec(name, grid, tuple(seeds), None, workers, override))


def campaign_nikiforov(max_m: int, r: int, **kw: Any) -> CampaignReport:
    return _run("nikiforov", max_m=max_m, r=r, **kw)


def campaign_spectral_triangles(max_m: int, **kw: Any) -> CampaignReport:
    return _run("spectral-triangles", max_m=max_m, **kw)


def campaign_bollobas_nikiforov(max_m: int, **kw: Any) -> CampaignReport:
    return _run("bollobas-nikiforov", max_m=max_m, **kw)


def campaign_book(max_m: int, **kw: Any) -> CampaignReport:
    return _run("book-conjecture", max_m=max_m, **kw)


def campaign_tightness(r: int, pattern: str, n_values: Sequence[int], **kw: Any) -> CampaignReport:
    return _run("tightness", r=r, pattern=pattern, n_values=list(n_values), **kw)


def campaign_peel_properties(seeds: Iterable[int], n_values: Sequence[int], a: float, **kw: Any) -> CampaignReport:
    return _run("peel-properties", seeds=seeds, n_values=list(n_values), a=a, **kw)


def campaign_mubayi_sweep(r: int, pattern: str, n_values: Sequence[int], q_values: Sequence[int],
                          **kw: Any) -> CampaignReport:
    return _run("mubayi-sweep", r=r, pattern=pattern, n_values=list(n_values), q_values=list(q_values), **kw)


def campaign_partial_turan(m_values: Sequence[int], r_values: Sequence[int], **kw: Any) -> CampaignReport:
    return _run("partial-turan", m_values=list(m_values), r_values=list(r_values), **kw)


def campaign_perturbation(seeds: Iterable[int], sizes: Sequence[int] = (100, 100, 100), max_total: int = 3,
                          **kw: Any) -> CampaignReport:
    return _run("perturbation", seeds=seeds, sizes=list(sizes), max_total=max_total, **kw)

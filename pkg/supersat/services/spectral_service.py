# supersat/services/spectral_service.py
from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from supersat.config import setting
from supersat.errors import ConvergenceError, SupersatError
from supersat.models import (
    CheckReport,
    CheckStatus,
    Edge,
    Graph,
    PeelStep,
    PeelTrace,
    SpectralResult,
    TerminalReason,
)
from supersat.services.graph_core import build_complete_multipartite, build_turan

logger = logging.getLogger(__name__)


# =========================================================
# Perron pair
# =========================================================
def _power_iteration(matrix: sp.csr_matrix, tol: float, max_iter: int) -> tuple[float, np.ndarray, float, int]:
    """Power iteration on A + I for one connected component.

    The +I shift keeps the iteration convergent on bipartite components, where
    -rho is also an eigenvalue. Returns (rho, x, residual, iterations) with rho the
    Rayleigh quotient of the final unit vector.
    """
    size = matrix.shape[0]
    x = np.full(size, 1.0 / math.sqrt(size))
    rho, residual = 0.0, math.inf
    for iteration in range(1, max_iter + 1):
        ax = matrix @ x
        rho = float(x @ ax)
        residual = float(np.linalg.norm(ax - rho * x))
        if residual <= tol:
            return rho, x, residual, iteration
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"power iteration did not reach residual {tol:g} in {max_iter} iterations "
        f"(best estimate {rho:.12g}, residual {residual:.3g})",
        estimate=rho,
        residual=residual,
    )


def spectral_radius(graph: Graph, tol: float | None = None, max_iter: int | None = None) -> SpectralResult:
    """rho(G) with the Perron vector of a maximum-rho component, zero elsewhere.

    Ties between components go to the one holding the smallest vertex index.
    """
    if graph.m == 0:
        raise SupersatError("spectral radius needs a graph with at least one edge")
    tol = float(tol if tol is not None else setting("SPECTRAL_TOL"))
    max_iter = int(max_iter if max_iter is not None else setting("SPECTRAL_MAX_ITER"))

    adjacency = graph.adjacency_matrix()
    best: tuple[float, np.ndarray, float, tuple[int, ...]] | None = None
    total_iterations = 0
    for component in graph.components():
        if len(component) < 2:
            continue
        index = np.asarray(component)
        rho, vec, residual, iterations = _power_iteration(adjacency[index][:, index].tocsr(), tol, max_iter)
        total_iterations += iterations
        # components arrive ordered by smallest vertex, so a tie keeps the earlier one
        if best is None or rho > best[0] + 10 * tol:
            best = (rho, vec, residual, component)

    assert best is not None
    rho, vec, residual, component = best
    x = np.zeros(graph.n)
    x[np.asarray(component)] = vec
    return SpectralResult(
        rho=rho,
        x=x,
        residual=residual,
        iterations=total_iterations,
        dominant_component=frozenset(component),
    )


def phi(graph: Graph, spectral: SpectralResult | None = None) -> float:
    """Normalized spectral radius rho(G) / sqrt(e(G))."""
    if graph.m == 0:
        raise SupersatError("phi is undefined on a graph without edges")
    spectral = spectral or spectral_radius(graph)
    return spectral.rho / math.sqrt(graph.m)


# =========================================================
# Light edges and peeling
# =========================================================
def light_threshold(m: int) -> float:
    return 1.0 / (8.0 * math.sqrt(m))


def edge_products(graph: Graph, spectral: SpectralResult) -> dict[Edge, float]:
    x = spectral.x
    return {e: float(x[e[0]] * x[e[1]]) for e in graph.sorted_edges}


def light_edges(graph: Graph, spectral: SpectralResult) -> list[Edge]:
    """Edges with x_u * x_v <= 1/(8 sqrt(m)), lexicographic order. No slack on the threshold."""
    if graph.m == 0:
        return []
    threshold = light_threshold(graph.m)
    return [e for e, product in edge_products(graph, spectral).items() if product <= threshold]


def peel(graph: Graph, epsilon: float, tol: float | None = None) -> PeelTrace:
    """Remove one light edge per round, recomputing the Perron vector each time.

    The edge removed is the one with the smallest product x_u * x_v (lexicographic on
    ties). Stops when no light edge remains or the trace holds max(1, floor(eps*m))
    graphs; the step cap is tested first.
    """
    if not 0 < epsilon < 1:
        raise SupersatError(f"epsilon must lie in (0, 1), got {epsilon}")
    if graph.m == 0:
        raise SupersatError("cannot peel a graph without edges")

    m = graph.m
    cap = max(1, math.floor(epsilon * m))
    steps: list[PeelStep] = []
    current = graph
    index = 1
    while True:
        try:
            spectral = spectral_radius(current, tol=tol)
        except ConvergenceError as exc:
            exc.partial = PeelTrace(epsilon, m, cap, tuple(steps), None, terminal=current)
            raise
        current_phi = spectral.rho / math.sqrt(current.m)

        reason: TerminalReason | None = None
        chosen: tuple[float, Edge] | None = None
        if index >= cap:
            reason = TerminalReason.STEP_CAP
        else:
            products = edge_products(current, spectral)
            threshold = light_threshold(current.m)
            candidates = [(p, e) for e, p in products.items() if p <= threshold]
            if not candidates:
                reason = TerminalReason.NO_LIGHT_EDGES
            else:
                chosen = min(candidates)

        if reason is not None:
            steps.append(PeelStep(index, current.m, spectral.rho, current_phi))
            logger.debug("peel stopped at G_%d (%s), e = %d", index, reason.value, current.m)
            return PeelTrace(epsilon, m, cap, tuple(steps), reason, terminal=current, terminal_spectral=spectral)

        product, edge = chosen  # type: ignore[misc]
        steps.append(PeelStep(index, current.m, spectral.rho, current_phi, edge, product))
        logger.debug("peel G_%d: removing %s (product %.3g)", index, edge, product)
        current = current.without_edge(*edge)
        index += 1


# =========================================================
# Peeling invariants
# =========================================================
def _slack(slack: float | None) -> float:
    return float(slack if slack is not None else setting("CHECK_SLACK"))


def check_peel_growth(trace: PeelTrace, a: float, slack: float | None = None) -> CheckReport:
    """Along a trace started from rho(G_1) >= sqrt(a*m), 0.81 <= a <= 2:

        rho(G_i) >= sqrt(a * e(G_i)) + (i - 1) / (5 sqrt(m))
        Phi(G_i) - Phi(G_1) >= (i - 1) / (5 m)
    """
    if not 0.81 <= a <= 2:
        raise SupersatError(f"a must lie in [0.81, 2], got {a}")
    slack = _slack(slack)
    if not trace.steps:
        raise SupersatError("trace has no steps")

    first = trace.steps[0]
    m = trace.m
    required = math.sqrt(a * m)
    if first.rho < required:
        return CheckReport(
            "peel-growth",
            CheckStatus.HYPOTHESIS_NOT_MET,
            slack=slack,
            details={"rho": first.rho, "required": required, "a": a, "m": m},
        )

    min_rho_margin = math.inf
    min_phi_margin = math.inf
    violation = None
    for step in trace.steps:
        shift = step.index - 1
        rho_margin = step.rho - math.sqrt(a * step.edges) - shift / (5 * math.sqrt(m))
        phi_margin = step.phi - first.phi - shift / (5 * m)
        min_rho_margin = min(min_rho_margin, rho_margin)
        min_phi_margin = min(min_phi_margin, phi_margin)
        if violation is None and (rho_margin < -slack or phi_margin < -slack):
            violation = {"i": step.index, "rho_margin": rho_margin, "phi_margin": phi_margin}

    return CheckReport(
        "peel-growth",
        CheckStatus.FAIL if violation else CheckStatus.PASS,
        margins={"rho": min_rho_margin, "phi": min_phi_margin},
        first_violation=violation,
        slack=slack,
        details={"a": a, "m": m, "steps": trace.length},
    )


def check_step_bound(trace: PeelTrace, slack: float | None = None) -> CheckReport:
    """rho(G_i) <= rho(G_{i+1}) + 1/(4 sqrt(e(G_i))) for consecutive graphs of the trace."""
    slack = _slack(slack)
    worst = math.inf
    violation = None
    for before, after in zip(trace.steps, trace.steps[1:]):
        margin = after.rho + 1.0 / (4.0 * math.sqrt(before.edges)) - before.rho
        worst = min(worst, margin)
        if violation is None and margin < -slack:
            violation = {"i": before.index, "margin": margin}
    return CheckReport(
        "step-bound",
        CheckStatus.FAIL if violation else CheckStatus.PASS,
        margins={"step": worst} if math.isfinite(worst) else {},
        first_violation=violation,
        slack=slack,
    )


def check_light_free_bounds(
    graph: Graph,
    spectral: SpectralResult | None,
    a: float,
    slack: float | None = None,
) -> CheckReport:
    """Entry, order and minimum-degree bounds for a light-edge-free graph with rho >= sqrt(a*m), 1 < a <= 2.

    With eps = (a - 1)/8:
        eps^5 m^(-1/4) < x_v < eps^(-4) m^(-1/4)
        |G| <= eps^(-10) sqrt(m)
        delta(G) >= eps^9 sqrt(m)
    """
    if not 1 < a <= 2:
        raise SupersatError(f"a must lie in (1, 2], got {a}")
    slack = _slack(slack)
    if graph.m == 0:
        return CheckReport("light-free-bounds", CheckStatus.HYPOTHESIS_NOT_MET, slack=slack,
                           details={"reason": "graph has no edges"})
    spectral = spectral or spectral_radius(graph)
    m = graph.m

    reasons = []
    if graph.min_degree == 0:
        reasons.append("graph has isolated vertices")
    light = light_edges(graph, spectral)
    if light:
        reasons.append(f"graph has {len(light)} light edge(s)")
    if spectral.rho < math.sqrt(a * m):
        reasons.append(f"rho = {spectral.rho:.6g} < sqrt(a*m) = {math.sqrt(a * m):.6g}")
    if reasons:
        return CheckReport("light-free-bounds", CheckStatus.HYPOTHESIS_NOT_MET, slack=slack,
                           details={"reason": "; ".join(reasons), "a": a, "m": m})

    eps = (a - 1) / 8
    root_m = math.sqrt(m)
    quarter = m ** -0.25
    x = spectral.x
    margins = {
        "entry_lower": float(x.min()) - eps**5 * quarter,
        "entry_upper": eps**-4 * quarter - float(x.max()),
        "order_upper": eps**-10 * root_m - graph.n,
        "min_degree_lower": graph.min_degree - eps**9 * root_m,
    }
    failed = {k: v for k, v in margins.items() if v < -slack}
    return CheckReport(
        "light-free-bounds",
        CheckStatus.FAIL if failed else CheckStatus.PASS,
        margins=margins,
        first_violation=failed or None,
        slack=slack,
        details={"a": a, "m": m, "n": graph.n},
    )


# =========================================================
# Dense subgraphs
# =========================================================
def eps_dense_report(graph: Graph, sub: Graph, epsilon: float, r: int, slack: float | None = None) -> CheckReport:
    """G' is eps-dense in G when 1 <= e(G)-e(G') <= sqrt(2e(G)/(1-1/r)) and Phi gains >= eps * gap / e(G)."""
    if r < 2:
        raise SupersatError(f"r must be at least 2, got {r}")
    if not 0 < epsilon < 0.2:
        raise SupersatError(f"epsilon must lie in (0, 1/5), got {epsilon}")
    if not sub.is_edge_subgraph_of(graph):
        raise SupersatError("the candidate is not an edge subgraph of the host graph")
    slack = _slack(slack)
    gap = graph.m - sub.m
    window = math.sqrt(2 * graph.m / (1 - 1 / r))
    details = {"gap": gap, "window": window, "epsilon": epsilon, "r": r}
    if graph.m == 0 or sub.m == 0:
        return CheckReport("eps-dense", CheckStatus.FAIL, slack=slack, details=details,
                           first_violation={"reason": "empty graph"})

    gain = phi(sub) - phi(graph)
    needed = epsilon * gap / graph.m
    margins = {"gap_lower": gap - 1, "gap_upper": window - gap, "phi_gain": gain - needed}
    failed = {}
    if gap < 1:
        failed["gap_lower"] = margins["gap_lower"]
    if gap > window:
        failed["gap_upper"] = margins["gap_upper"]
    if margins["phi_gain"] < -slack:
        failed["phi_gain"] = margins["phi_gain"]
    return CheckReport(
        "eps-dense",
        CheckStatus.FAIL if failed else CheckStatus.PASS,
        margins=margins,
        first_violation=failed or None,
        slack=slack,
        details=details,
    )


def check_eps_dense(graph: Graph, sub: Graph, epsilon: float, r: int) -> bool:
    return eps_dense_report(graph, sub, epsilon, r).passed


# =========================================================
# Perturbed complete multipartite graphs
# =========================================================
def perturb_multipartite(
    sizes: Sequence[int], class_edges: int, cross_deletions: int, seed: int = 0
) -> tuple[Graph, Graph]:
    """(K, G): K = K_r(sizes) and G = K with seeded random class-edge additions and cross-edge deletions."""
    base = build_complete_multipartite(sorted(sizes, reverse=True))
    assert base.partition is not None
    rng = np.random.default_rng(seed)

    inside = [(u, v) for part in base.partition.parts for i, u in enumerate(part) for v in part[i + 1:]]
    if class_edges > len(inside) or cross_deletions > base.graph.m:
        raise SupersatError("not enough vertex pairs for the requested perturbation")
    cross = base.graph.sorted_edges

    added = [inside[i] for i in sorted(rng.choice(len(inside), size=class_edges, replace=False))]
    removed = {cross[i] for i in rng.choice(len(cross), size=cross_deletions, replace=False)}
    perturbed = Graph(base.graph.n, (base.graph.edges - removed) | frozenset(added))
    return base.graph, perturbed


def check_perturbation_bound(
    sizes: Sequence[int],
    class_edges: int,
    cross_deletions: int,
    k: int | None = None,
    seed: int = 0,
    slack: float | None = None,
) -> CheckReport:
    """Spectral radius of a complete multipartite graph after a few class-edge additions and cross-edge deletions.

    Without k:  |rho(G) - rho(K) - 2(a1 - a2)/n| <= 56 (a1 + a2) phi / n^2,  phi = max(n1 - nr, 2(a1 + a2)).
    With k:     rho(G) <= rho(T_{n,r}) + 2(a1 - a2)/n - 2(r-1)k^2/(rn) (1 - 28 r psi/n)^4
                          + 56 (a1 + a2) 7 r psi / n^2,  psi = max(3k, 2(a1 + a2)).

    The inequality is evaluated on every instance. When the size hypotheses fail the
    status is hypothesis-not-met and `inequality_holds` records the outcome anyway.
    """
    if class_edges < 0 or cross_deletions < 0:
        raise SupersatError("perturbation counts must be nonnegative")
    if k is not None and k < 0:
        raise SupersatError(f"k must be nonnegative, got {k}")
    slack = _slack(slack)
    ordered = sorted((int(s) for s in sizes), reverse=True)
    n, r = sum(ordered), len(ordered)
    a1, a2 = class_edges, cross_deletions
    spread = ordered[0] - ordered[-1]

    base, perturbed = perturb_multipartite(ordered, a1, a2, seed)
    rho_g = spectral_radius(perturbed).rho
    size_cap = n / (20 * r) ** 3
    hypotheses = {"alpha_cap": max(a1, a2) <= size_cap}

    if k is None:
        rho_k = spectral_radius(base).rho
        spread_term = max(spread, 2 * (a1 + a2))
        lhs = abs(rho_g - rho_k - 2 * (a1 - a2) / n)
        rhs = 56 * (a1 + a2) * spread_term / n**2
        hypotheses["balanced"] = spread <= n / 400
        values = {"rho_G": rho_g, "rho_K": rho_k, "lhs": lhs, "rhs": rhs, "phi": spread_term}
        margin = rhs - lhs
        check = "perturbation-balanced"
    else:
        rho_t = spectral_radius(build_turan(n, r).graph).rho
        psi = max(3 * k, 2 * (a1 + a2))
        rhs = (
            rho_t
            + 2 * (a1 - a2) / n
            - 2 * (r - 1) * k**2 / (r * n) * (1 - 28 * r * psi / n) ** 4
            + 56 * (a1 + a2) * 7 * r * psi / n**2
        )
        hypotheses["spread"] = spread >= 2 * k
        hypotheses["k_cap"] = k <= size_cap
        values = {"rho_G": rho_g, "rho_T": rho_t, "rhs": rhs, "psi": psi, "k": k}
        margin = rhs - rho_g
        check = "perturbation-unbalanced"

    holds = margin >= -slack
    details = {
        **values,
        "sizes": ordered,
        "class_edges": a1,
        "cross_deletions": a2,
        "seed": seed,
        "hypotheses": hypotheses,
        "inequality_holds": holds,
    }
    if not all(hypotheses.values()):
        status = CheckStatus.HYPOTHESIS_NOT_MET
    else:
        status = CheckStatus.PASS if holds else CheckStatus.FAIL
    return CheckReport(
        check,
        status,
        margins={"bound": margin},
        first_violation=None if holds else {"margin": margin},
        slack=slack,
        details=details,
    )

# supersat/services/report_service.py
from __future__ import annotations

from typing import Any, Sequence

from supersat.errors import SupersatError
from supersat.models import CountMethod, Graph, GraphFamilySpec, PatternProfile, TerminalReason, VertexPartition
from supersat.services import graph_core
from supersat.services.counting_service import (
    alpha_exact,
    alpha_residual_scan,
    c_bruteforce,
    c_exact,
    count_copies,
    count_copies_through_edge,
    count_report,
)
from supersat.services.spectral_service import (
    check_light_free_bounds,
    check_peel_growth,
    check_step_bound,
    light_edges,
    peel,
    phi,
    spectral_radius,
)
from supersat.services.stability_service import distance_to_bipartite, distance_to_turan
from supersat.utils.graph_io import GRAPH6_MAX_N, write_graph6

CNF_METHODS = ("formula", "brute-force", "both", "alpha", "scan")
DISTANCE_TARGETS = ("turan", "bipartite")


def _host_label(graph: Graph) -> str:
    return f"G(n={graph.n},m={graph.m})"


class ReportService:
    """Payload builders shared by the CLI and the HTTP API.

    Both surfaces call these and render the result through utils.formatters, so the
    two never disagree on a field.
    """

    @staticmethod
    def spectral(graph: Graph, include_vector: bool = True) -> dict[str, Any]:
        result = spectral_radius(graph)
        return {
            "graph": {"n": graph.n, "m": graph.m},
            "spectral": result.to_dict(include_vector=include_vector),
            "phi": phi(graph, result) if graph.m else None,
            "light_edges": [list(e) for e in light_edges(graph, result)],
        }

    @staticmethod
    def count(graph: Graph, profile: PatternProfile, edge: Sequence[int] | None = None,
              partition: VertexPartition | None = None, *, override: bool = False) -> dict[str, Any]:
        if edge is None:
            if partition is not None:
                raise SupersatError("a partition only applies to per-edge counts")
            report = count_report(
                "N_F", lambda: count_copies(graph, profile, override=override),
                CountMethod.BRUTE_FORCE, profile.label, _host_label(graph),
            )
        else:
            u, v = int(edge[0]), int(edge[1])
            quantity = f"N_F({u},{v})" + (" exclusive" if partition is not None else "")
            report = count_report(
                quantity,
                lambda: count_copies_through_edge(graph, profile, (u, v), partition, override=override),
                CountMethod.BRUTE_FORCE, profile.label, _host_label(graph),
            )
        return report.to_dict()

    @staticmethod
    def cnf(profile: PatternProfile, n: int | None, method: str = "both",
            n_values: Sequence[int] | None = None, *, override: bool = False) -> dict[str, Any]:
        if method not in CNF_METHODS:
            raise SupersatError(f"method must be one of {', '.join(CNF_METHODS)}, got {method!r}")
        if method == "alpha":
            return {"pattern": profile.label, "alpha": alpha_exact(profile)}
        if method == "scan":
            if not n_values:
                raise SupersatError("scan needs a list of n values")
            return alpha_residual_scan(profile, n_values).to_dict()
        if n is None:
            raise SupersatError(f"method {method} needs n")

        payload: dict[str, Any] = {"pattern": profile.label, "n": n}
        if method in ("formula", "both"):
            payload["formula"] = count_report(
                f"c({n},F)", lambda: c_exact(n, profile), CountMethod.FORMULA, profile.label, f"T_{{{n},{profile.r}}}"
            ).to_dict()
        if method in ("brute-force", "both"):
            payload["brute_force"] = count_report(
                f"c({n},F)", lambda: c_bruteforce(n, profile, override=override), CountMethod.BRUTE_FORCE,
                profile.label, f"T_{{{n},{profile.r}}}",
            ).to_dict()
        if method == "both":
            payload["agree"] = payload["formula"]["value"] == payload["brute_force"]["value"]
        return payload

    @staticmethod
    def pattern(profile: PatternProfile, include_colorings: bool = True) -> dict[str, Any]:
        payload = profile.to_dict(include_colorings=include_colorings)
        if profile.is_color_critical and profile.chi >= 3:
            payload["alpha"] = alpha_exact(profile)
        return payload

    @staticmethod
    def peel(graph: Graph, epsilon: float, a: float | None = None, slack: float | None = None) -> dict[str, Any]:
        trace = peel(graph, epsilon)
        checks = [check_step_bound(trace, slack)]
        if a is not None:
            checks.insert(0, check_peel_growth(trace, a, slack))
            if a > 1 and trace.terminal_reason is TerminalReason.NO_LIGHT_EDGES and trace.terminal is not None:
                checks.append(check_light_free_bounds(trace.terminal.normalize(), None, a, slack))
        return {"trace": trace.to_dict(), "checks": [c.to_dict() for c in checks]}

    @staticmethod
    def construct(kind: str, parameters: Sequence[int]) -> dict[str, Any]:
        built = graph_core.build_family(GraphFamilySpec(kind, tuple(int(p) for p in parameters)))
        payload = built.to_dict()
        if built.graph.n <= GRAPH6_MAX_N:
            payload["graph6"] = write_graph6(built.graph).strip()
        return payload

    @staticmethod
    def distance(graph: Graph, target: str, r: int = 2, mode: str = "exact", *, seed: int = 0,
                 starts: int | None = None, workers: int | None = None, override: bool = False) -> dict[str, Any]:
        options = {"seed": seed, "starts": starts, "workers": workers, "override": override}
        if target == "turan":
            result = distance_to_turan(graph, r, mode, **options)
        elif target == "bipartite":
            result = distance_to_bipartite(graph, mode, **options)
        else:
            raise SupersatError(f"target must be one of {', '.join(DISTANCE_TARGETS)}, got {target!r}")
        return result.to_dict()

    @staticmethod
    def enumerate(max_n: int, m: int, labeled: bool = False, *, override: bool = False) -> dict[str, Any]:
        graphs = [
            write_graph6(g).strip()
            for g in graph_core.enumerate_graphs(max_n, m, dedupe=not labeled, override=override)
        ]
        return {"max_n": max_n, "m": m, "labeled": labeled, "count": len(graphs), "graphs": graphs}

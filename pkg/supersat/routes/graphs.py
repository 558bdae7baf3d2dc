# supersat/routes/graphs.py
from __future__ import annotations

from flask import Blueprint, current_app

from supersat.errors import SupersatError
from supersat.routes import graph_from_body, json_body, ok
from supersat.services.report_service import ReportService
from supersat.utils.request_parsers import parse_bool, parse_float, parse_int, parse_int_list

graphs_bp = Blueprint("graphs", __name__, url_prefix="/api/graphs")


@graphs_bp.post("/construct")
def construct():
    data = json_body()
    family = (data.get("family") or "").strip()
    if not family:
        raise SupersatError("missing 'family'")
    parameters = parse_int_list(data.get("parameters")) or []
    return ok(ReportService.construct(family, parameters))


@graphs_bp.post("/spectral")
def spectral():
    data = json_body()
    graph = graph_from_body(data)
    include_vector = parse_bool(data.get("vector"))
    return ok(ReportService.spectral(graph, include_vector=include_vector is not False))


@graphs_bp.post("/peel")
def peel():
    data = json_body()
    graph = graph_from_body(data)
    epsilon = parse_float(data.get("epsilon"))
    if epsilon is None:
        raise SupersatError("missing or invalid 'epsilon'")
    payload = ReportService.peel(graph, epsilon, parse_float(data.get("a")))
    current_app.logger.info("peel: m=%d, %d steps", graph.m, payload["trace"]["length"])
    return ok(payload)


@graphs_bp.post("/distance")
def distance():
    data = json_body()
    graph = graph_from_body(data)
    return ok(
        ReportService.distance(
            graph,
            (data.get("target") or "turan").strip(),
            parse_int(data.get("r")) or 2,
            (data.get("mode") or "exact").strip(),
            seed=parse_int(data.get("seed")) or 0,
            starts=parse_int(data.get("starts")),
            workers=1,
        )
    )

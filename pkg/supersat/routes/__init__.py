# supersat/routes/__init__.py
from __future__ import annotations

from typing import Any

from flask import Flask, jsonify, request

from supersat.errors import SupersatError
from supersat.models import Graph
from supersat.utils.formatters import jsonable
from supersat.utils.graph_io import read_graph


def register_blueprints(app: Flask) -> None:
    from .campaigns import campaigns_bp
    from .graphs import graphs_bp
    from .patterns import patterns_bp

    app.register_blueprint(graphs_bp)
    app.register_blueprint(patterns_bp)
    app.register_blueprint(campaigns_bp)


def json_body() -> dict[str, Any]:
    data = request.get_json(silent=True)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise SupersatError("request body must be a JSON object")
    return data


def graph_from_body(data: dict[str, Any], key: str = "graph") -> Graph:
    """{"graph": "<edge list or graph6 text>", "format": ...} or {"graph": {"n": 4, "edges": [[0, 1], ...]}}."""
    raw = data.get(key)
    if raw is None:
        raise SupersatError(f"missing {key!r}")
    if isinstance(raw, dict):
        n = raw.get("n")
        if not isinstance(n, int):
            raise SupersatError(f"{key}.n must be an integer")
        return Graph.from_edges(n, raw.get("edges") or [])
    return read_graph(str(raw), data.get("format"))


def ok(payload: Any):
    return jsonify({"success": True, "result": jsonable(payload)})

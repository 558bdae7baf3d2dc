# supersat/routes/patterns.py
from __future__ import annotations

from flask import Blueprint

from supersat.constants.patterns import PATTERN_FORMS
from supersat.errors import SupersatError
from supersat.models import VertexPartition
from supersat.routes import graph_from_body, json_body, ok
from supersat.services.pattern_service import named_profile
from supersat.services.report_service import ReportService
from supersat.utils.request_parsers import parse_edge, parse_int, parse_int_list, parse_parts

patterns_bp = Blueprint("patterns", __name__, url_prefix="/api")


def _pattern(data: dict):
    # HTTP only resolves registry names; pattern files are a CLI feature
    name = (data.get("pattern") or "").strip()
    if not name:
        raise SupersatError("missing 'pattern'")
    return named_profile(name)


@patterns_bp.get("/patterns")
def pattern_forms():
    return ok(PATTERN_FORMS)


@patterns_bp.get("/patterns/<name>")
def pattern_profile(name: str):
    return ok(ReportService.pattern(named_profile(name)))


@patterns_bp.post("/count")
def count():
    data = json_body()
    parts = parse_parts(data.get("partition"))
    return ok(
        ReportService.count(
            graph_from_body(data, "host"),
            _pattern(data),
            parse_edge(data.get("edge")),
            VertexPartition.from_parts(parts) if parts else None,
        )
    )


@patterns_bp.post("/cnf")
def cnf():
    data = json_body()
    return ok(
        ReportService.cnf(
            _pattern(data),
            parse_int(data.get("n")),
            (data.get("method") or "both").strip(),
            parse_int_list(data.get("n_values")),
            override=False,
        )
    )

# supersat/routes/campaigns.py
from __future__ import annotations

from flask import Blueprint, current_app

from supersat.extensions import limiter
from supersat.routes import json_body, ok
from supersat.services.campaign_service import CAMPAIGNS, run_campaign, spec_from_mapping

campaigns_bp = Blueprint("campaigns", __name__, url_prefix="/api/campaigns")


def _campaign_limit() -> str:
    return current_app.config["CAMPAIGN_RATE_LIMIT"]


@campaigns_bp.get("")
def list_campaigns():
    return ok({name: d.description for name, d in CAMPAIGNS.items()})


@campaigns_bp.post("/<name>")
@limiter.limit(_campaign_limit)
def start_campaign(name: str):
    data = json_body()
    data.pop("output", None)
    # guardrail overrides and --workers are CLI-only; one process per request
    data.pop("override", None)
    data["workers"] = 1
    spec = spec_from_mapping({**data, "campaign": name, "override": False})
    report = run_campaign(spec)
    current_app.logger.info(
        "campaign %s: %d records, counterexamples=%s",
        name,
        len(report.records),
        report.summary["counterexamples"],
    )
    return ok(report)

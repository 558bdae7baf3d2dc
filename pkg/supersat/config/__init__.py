# supersat/config/__init__.py
from __future__ import annotations

"""
supersat.config is a PACKAGE.

- Runtime settings live in: supersat.settings.Config
- setting() resolves a key the same way everywhere:
    1) Flask config of the active app (HTTP requests, `flask supersat ...`)
    2) supersat.settings.Config (plain library use, CLI, worker processes)
"""

import logging
from typing import Any

from flask import current_app, has_app_context

from supersat.errors import GuardrailError
from supersat.settings import Config

logger = logging.getLogger(__name__)


def setting(name: str, default: Any = None) -> Any:
    if has_app_context():
        value = current_app.config.get(name)
        if value is not None:
            return value
    return getattr(Config, name, default)


def check_guardrail(name: str, value: int, *, override: bool = False, what: str = "") -> None:
    """Raise GuardrailError when value exceeds setting(name), unless overridden."""
    limit = setting(name)
    if limit is None or value <= limit:
        return
    if override:
        logger.warning("guardrail %s overridden: %s=%d exceeds %d", name, what or "value", value, limit)
        return
    raise GuardrailError(
        f"{what or name} = {value} exceeds the guardrail {name} = {limit}; pass override to force.",
        limit=limit,
        value=value,
    )


__all__ = ["setting", "check_guardrail"]

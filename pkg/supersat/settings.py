# supersat/settings.py
from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        return default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        return default


class Config:
    # ======================
    # Core
    # ======================
    LOG_LEVEL = os.environ.get("SUPERSAT_LOG_LEVEL", "WARNING").upper()

    # ======================
    # Eigensolver
    # ======================
    SPECTRAL_TOL = _env_float("SUPERSAT_SPECTRAL_TOL", 1e-10)
    SPECTRAL_MAX_ITER = _env_int("SUPERSAT_SPECTRAL_MAX_ITER", 1_000_000)

    # Additive slack for peeling/density checks and for campaign inequalities.
    CHECK_SLACK = _env_float("SUPERSAT_CHECK_SLACK", 1e-9)
    CAMPAIGN_SLACK = _env_float("SUPERSAT_CAMPAIGN_SLACK", 1e-8)

    # ======================
    # Guardrails
    # ======================
    ENUM_MAX_N = _env_int("SUPERSAT_ENUM_MAX_N", 10)
    ENUM_MAX_M = _env_int("SUPERSAT_ENUM_MAX_M", 15)
    CHI_MAX_VERTICES = _env_int("SUPERSAT_CHI_MAX_VERTICES", 16)
    AUT_MAX_VERTICES = _env_int("SUPERSAT_AUT_MAX_VERTICES", 12)
    BETA_MAX_VERTICES = _env_int("SUPERSAT_BETA_MAX_VERTICES", 16)
    COUNT_MAX_PATTERN = _env_int("SUPERSAT_COUNT_MAX_PATTERN", 8)
    COUNT_BUDGET = _env_int("SUPERSAT_COUNT_BUDGET", 10**9)
    TURAN_EXACT_MAX = _env_int("SUPERSAT_TURAN_EXACT_MAX", 12)
    BIPARTITE_EXACT_MAX = _env_int("SUPERSAT_BIPARTITE_EXACT_MAX", 14)
    CAMPAIGN_MAX_M = _env_int("SUPERSAT_CAMPAIGN_MAX_M", 10)
    SWEEP_MAX_N = _env_int("SUPERSAT_SWEEP_MAX_N", 9)
    SWEEP_MAX_Q = _env_int("SUPERSAT_SWEEP_MAX_Q", 3)

    # ======================
    # Local search / workers
    # ======================
    LOCAL_SEARCH_STARTS = _env_int("SUPERSAT_LOCAL_SEARCH_STARTS", 32)
    LOCAL_SEARCH_PATIENCE = _env_int("SUPERSAT_LOCAL_SEARCH_PATIENCE", 200)
    WORKERS = _env_int("SUPERSAT_WORKERS", os.cpu_count() or 1)

    # ======================
    # Flask-Limiter
    # ======================
    RATELIMIT_STORAGE_URI = (
        os.environ.get("LIMITER_STORAGE_URL")
        or os.environ.get("REDIS_URL")
        or "memory://"
    )
    RATELIMIT_HEADERS_ENABLED = True
    CAMPAIGN_RATE_LIMIT = os.environ.get("SUPERSAT_CAMPAIGN_RATE_LIMIT", "6 per minute")

from __future__ import annotations

import re
from typing import Any

from supersat.errors import SupersatError

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_float(val: Any) -> float | None:
    try:
        if val is None or str(val).strip() == "":
            return None
        return float(val)
    except (TypeError, ValueError):
        return None


def parse_int(val: Any) -> int | None:
    try:
        if val is None or str(val).strip() == "":
            return None
        return int(val)
    except (TypeError, ValueError):
        return None


def parse_bool(val: Any) -> bool | None:
    if isinstance(val, bool):
        return val
    if val is None:
        return None
    s = str(val).strip().lower()
    if s in {"1", "true", "yes", "on"}:
        return True
    if s in {"0", "false", "no", "off"}:
        return False
    return None


def parse_int_list(val: Any) -> list[int] | None:
    """Accepts [1, 2], "1,2,3", "1 2 3" or a range "0..9" (inclusive)."""
    if val is None:
        return None
    if isinstance(val, (list, tuple)):
        out = [parse_int(v) for v in val]
        if any(v is None for v in out):
            raise SupersatError(f"not an integer list: {val!r}")
        return out  # type: ignore[return-value]
    s = str(val).strip()
    if not s:
        return None
    match = _RANGE.match(s)
    if match:
        lo, hi = int(match.group(1)), int(match.group(2))
        if hi < lo:
            raise SupersatError(f"empty range {s!r}")
        return list(range(lo, hi + 1))
    out = []
    for token in re.split(r"[,\s]+", s):
        value = parse_int(token)
        if value is None:
            raise SupersatError(f"not an integer: {token!r}")
        out.append(value)
    return out


def parse_float_list(val: Any) -> list[float] | None:
    if val is None:
        return None
    tokens = val if isinstance(val, (list, tuple)) else re.split(r"[,\s]+", str(val).strip())
    out = []
    for token in tokens:
        if token == "":
            continue
        value = parse_float(token)
        if value is None:
            raise SupersatError(f"not a number: {token!r}")
        out.append(value)
    return out or None


def parse_edge(val: Any) -> tuple[int, int] | None:
    """Accepts (u, v), "u,v", "u-v" or "u v"."""
    if val is None:
        return None
    if isinstance(val, (list, tuple)):
        parts = list(val)
    else:
        parts = re.split(r"[,\s\-]+", str(val).strip())
    if len(parts) != 2:
        raise SupersatError(f"an edge needs exactly two endpoints: {val!r}")
    u, v = parse_int(parts[0]), parse_int(parts[1])
    if u is None or v is None:
        raise SupersatError(f"edge endpoints must be integers: {val!r}")
    return u, v


def parse_parts(val: Any) -> list[list[int]] | None:
    """Partition literal: "0,1,2|3,4,5" or [[0,1,2],[3,4,5]]."""
    if val is None:
        return None
    if isinstance(val, (list, tuple)):
        return [parse_int_list(p) or [] for p in val]
    s = str(val).strip()
    if not s:
        return None
    return [parse_int_list(chunk) or [] for chunk in s.split("|")]

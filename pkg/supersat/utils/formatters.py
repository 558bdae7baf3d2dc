# supersat/utils/formatters.py
from __future__ import annotations

import csv
import enum
import io
import json
import math
from fractions import Fraction
from typing import Any

import numpy as np

from supersat.constants.report import CSV_COLUMNS

FORMATS = ("json", "csv", "text")


def fraction_text(value: Fraction) -> str | int:
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def jsonable(value: Any) -> Any:
    """Reduce library objects to plain JSON types (exact rationals become "p/q")."""
    if value is None or isinstance(value, (bool, str, int)):
        return value
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, np.generic):
        return jsonable(value.item())
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, enum.Enum):
        return value.value
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def to_json(payload: Any) -> str:
    return json.dumps(jsonable(payload), indent=2, sort_keys=True) + "\n"


def to_csv(payload: Any) -> str:
    data = jsonable(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")

    if isinstance(data, dict) and "records" in data and "campaign" in data:
        writer.writerow(CSV_COLUMNS)
        for record in data["records"]:
            row = dict(record, campaign=data["campaign"])
            writer.writerow([_csv_cell(row.get(col)) for col in CSV_COLUMNS])
        return buf.getvalue()

    rows = data if isinstance(data, list) else [data]
    columns: list[str] = []
    for row in rows:
        for key in (row if isinstance(row, dict) else {"value": row}):
            if key not in columns:
                columns.append(key)
    writer.writerow(columns)
    for row in rows:
        row = row if isinstance(row, dict) else {"value": row}
        writer.writerow([_csv_cell(row.get(col)) for col in columns])
    return buf.getvalue()


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def to_text(payload: Any) -> str:
    lines: list[str] = []
    _text_lines(jsonable(payload), 0, lines)
    return "\n".join(lines) + "\n"


def _text_lines(value: Any, depth: int, out: list[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item and not _is_flat_list(item):
                out.append(f"{pad}{key}:")
                _text_lines(item, depth + 1, out)
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat_list(item):
                out.append(f"{pad}-")
                _text_lines(item, depth + 1, out)
            else:
                out.append(f"{pad}- {_scalar(item)}")
    else:
        out.append(f"{pad}{_scalar(value)}")


def _is_flat_list(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) or _is_pair(v) for v in value)


def _is_pair(value: Any) -> bool:
    return isinstance(value, list) and len(value) == 2 and all(isinstance(v, int) for v in value)


def _scalar(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def render(payload: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(payload)
    if fmt == "text":
        return to_text(payload)
    raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")

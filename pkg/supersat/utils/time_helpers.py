from __future__ import annotations

import time
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Iterator


def utcnow_aware() -> datetime:
    return datetime.now(timezone.utc)


def utc_timestamp() -> str:
    return utcnow_aware().replace(microsecond=0).isoformat()


@contextmanager
def stopwatch() -> Iterator[list[float]]:
    """Yields a one-element list that holds the elapsed seconds once the block exits."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - start

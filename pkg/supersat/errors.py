# supersat/errors.py
from __future__ import annotations

from typing import Any


class SupersatError(ValueError):
    """Root of every error raised on purpose by this package."""


class GraphParseError(SupersatError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphRangeError(GraphParseError):
    pass


class GuardrailError(SupersatError):
    def __init__(self, message: str, limit: int | None = None, value: int | None = None):
        self.limit = limit
        self.value = value
        super().__init__(message)


class ConvergenceError(SupersatError):
    def __init__(self, message: str, estimate: float | None = None, residual: float | None = None,
                 partial: Any = None):
        self.estimate = estimate
        self.residual = residual
        # peel attaches the trace built so far
        self.partial = partial
        super().__init__(message)


class BudgetExceededError(SupersatError):
    def __init__(self, message: str, lower_bound: int = 0):
        self.lower_bound = lower_bound
        super().__init__(message)


class NotColorCriticalError(SupersatError):
    pass


class DivisibilityError(SupersatError):
    pass


class ColoringInvariantError(SupersatError):
    pass

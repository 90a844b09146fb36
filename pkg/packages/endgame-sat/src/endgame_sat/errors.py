"""
Endgame SAT — Errors

Every failure raised by the SAT core derives from SatError so callers
(the CLI in particular) can map the whole family to one exit status.
"""
from __future__ import annotations

from typing import Optional


class SatError(Exception):
    """Base class for SAT core failures."""


class DimacsSyntaxError(SatError):
    """
    Raised when DIMACS text cannot be parsed.

    The message always carries the 1-based source line so reports are
    stable across runs.
    """

    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.message = message
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        if self.line is None:
            return f"DIMACS: {self.message}"
        return f"DIMACS line {self.line}: {self.message}"


class ClauseWidthError(DimacsSyntaxError):
    """Raised for a clause with more than three distinct literals."""

    def __init__(self, line: Optional[int], width: int):
        self.width = width
        super().__init__(
            line,
            f"clause has {width} distinct literals; at most 3 are supported",
        )


class OracleLimitError(SatError):
    """Raised when the brute-force oracle is asked for too many variables."""

    def __init__(self, num_vars: int, limit: int):
        self.num_vars = num_vars
        self.limit = limit
        super().__init__(
            f"brute-force oracle limited to {limit} variables, got {num_vars}"
        )


class EmptyClauseError(SatError):
    """Raised when a clause has no literals at all."""

    def __init__(self, line: Optional[int] = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"empty clause{where} cannot be normalized to 3 slots")

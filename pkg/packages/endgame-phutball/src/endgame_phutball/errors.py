"""
Endgame Phutball — Errors
"""
from __future__ import annotations

from typing import Optional


class PhutballError(Exception):
    """Base class for Phutball core failures."""


class BoardFormatError(PhutballError):
    """
    Raised when board text cannot be parsed.

    row and column are 1-based positions in the text (row 1 is the
    header line), so the message points at the offending glyph.
    """

    def __init__(self, row: Optional[int], column: Optional[int], message: str):
        self.row = row
        self.column = column
        self.message = message
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.column is not None:
            where.append(f"column {self.column}")
        prefix = f"board text ({', '.join(where)})" if where else "board text"
        return f"{prefix}: {self.message}"


class SequenceFormatError(PhutballError):
    """Raised when a jump sequence line cannot be parsed."""

    def __init__(self, token: str, message: str):
        self.token = token
        super().__init__(f"jump sequence token {token!r}: {message}")


class IllegalJumpError(PhutballError):
    """Raised by apply_jump for a direction with no legal, non-winning jump."""

    def __init__(self, direction: str, reason: str):
        self.direction = direction
        self.reason = reason
        super().__init__(f"illegal jump {direction}: {reason}")


class EnumerationLimitError(PhutballError):
    """Raised when exhaustive sequence enumeration exceeds its cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"sequence enumeration exceeded cap of {cap} ({count} sequences)")

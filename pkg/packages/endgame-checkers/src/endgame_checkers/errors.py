"""
Endgame Checkers — Errors
"""
from __future__ import annotations

from typing import Optional


class CheckersError(Exception):
    """Base class for checkers analyzer failures."""


class PositionFormatError(CheckersError):
    """Raised when position text cannot be parsed. row/column are 1-based text positions."""

    def __init__(self, row: Optional[int], column: Optional[int], message: str):
        self.row = row
        self.column = column
        self.message = message
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        if self.row is None:
            return f"position: {self.message}"
        if self.column is None:
            return f"position line {self.row}: {self.message}"
        return f"position line {self.row}, column {self.column}: {self.message}"


class LightSquareError(CheckersError):
    def __init__(self, file: int, rank: int):
        self.file = file
        self.rank = rank
        super().__init__(f"piece on light square file={file} rank={rank}")


class PieceNotFoundError(CheckersError):
    def __init__(self, square: tuple[int, int]):
        self.square = square
        super().__init__(f"no piece of the requested colour at {square[0]},{square[1]}")


class AlreadyKingError(CheckersError):
    def __init__(self, square: tuple[int, int]):
        self.square = square
        super().__init__(f"piece at {square[0]},{square[1]} is already a king")


class OracleExplosionError(CheckersError):
    """Raised when the brute-force oracle produces more sequences than its cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"oracle produced {count} jump sequences, cap is {cap}")

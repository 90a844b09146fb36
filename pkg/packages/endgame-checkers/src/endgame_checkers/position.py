"""
Endgame Checkers — Diamond-View Position

Checkers seen on its playable squares only, rotated 45 degrees: each dark
square becomes a cell of an orthogonal grid and every diagonal move
becomes a horizontal or vertical one. Cells of the bounding rectangle
that are not squares of the original board are marked unplayable.

Men move forward only: Black along +x and +y, White along -x and -y.
Kings move along all four axes.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator


class Square(NamedTuple):
    x: int
    y: int

    def shifted(self, dx: int, dy: int, k: int = 1) -> "Square":
        return Square(self.x + dx * k, self.y + dy * k)

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


AXES: tuple[tuple[int, int], ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


class Color(str, Enum):
    BLACK = "black"
    WHITE = "white"

    @property
    def opponent(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    @property
    def forward(self) -> tuple[tuple[int, int], ...]:
        """Axis steps a man of this colour may take."""
        return ((1, 0), (0, 1)) if self is Color.BLACK else ((-1, 0), (0, -1))


class Piece(BaseModel):
    model_config = ConfigDict(frozen=True)

    square: Square
    color: Color
    king: bool = False

    def steps(self) -> tuple[tuple[int, int], ...]:
        return AXES if self.king else self.color.forward


class CheckersPosition(BaseModel):
    """
    A position in diamond view.

    INVARIANTS:
    - every piece is on a playable on-board cell
    - at most one piece per cell
    """

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)
    mover: Color = Color.BLACK
    pieces: tuple[Piece, ...] = ()
    unplayable: frozenset[Square] = frozenset()

    _index: dict[Square, Piece] = PrivateAttr(default_factory=dict)

    @field_validator("pieces")
    @classmethod
    def sort_pieces(cls, v: tuple[Piece, ...]) -> tuple[Piece, ...]:
        return tuple(sorted(v, key=lambda p: (p.square.y, p.square.x)))

    @model_validator(mode="after")
    def validate_pieces(self) -> "CheckersPosition":
        seen: set[Square] = set()
        for piece in self.pieces:
            if not self.is_playable(piece.square):
                raise ValueError(f"piece at {piece.square} is not on a playable cell")
            if piece.square in seen:
                raise ValueError(f"two pieces share {piece.square}")
            seen.add(piece.square)
        return self

    def model_post_init(self, __context) -> None:
        self._index = {p.square: p for p in self.pieces}

    def is_on_board(self, square: tuple[int, int]) -> bool:
        x, y = square
        return 0 <= x < self.width and 0 <= y < self.height

    def is_playable(self, square: tuple[int, int]) -> bool:
        return self.is_on_board(square) and Square(*square) not in self.unplayable

    def piece_at(self, square: tuple[int, int]) -> Piece | None:
        return self._index.get(Square(*square))

    def pieces_of(self, color: Color) -> list[Piece]:
        return [p for p in self.pieces if p.color is color]

    def is_king_row(self, square: tuple[int, int], color: Color) -> bool:
        """A man of this colour kings on a playable cell with no playable forward neighbour."""
        sq = Square(*square)
        return self.is_playable(sq) and not any(
            self.is_playable(sq.shifted(dx, dy)) for dx, dy in color.forward
        )

    def playable_squares(self) -> list[Square]:
        return [
            Square(x, y)
            for y in range(self.height)
            for x in range(self.width)
            if self.is_playable((x, y))
        ]

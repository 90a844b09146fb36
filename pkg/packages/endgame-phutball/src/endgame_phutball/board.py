"""
Endgame Phutball — Board

Immutable Phutball position: dimensions, the ball, and the set of men.
The mover always attacks row H-1.
"""
from __future__ import annotations

from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator

from endgame_phutball.geometry import Coord


class Board(BaseModel):
    """
    A Phutball position.

    INVARIANTS:
    - ball is on-board and not on a man
    - every man is on-board
    """

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=1)
    height: int = Field(..., ge=2)
    ball: Coord
    men: frozenset[Coord] = frozenset()

    @model_validator(mode="after")
    def validate_position(self) -> "Board":
        if not self.is_on_board(self.ball):
            raise ValueError(f"ball {self.ball} is off the {self.width}x{self.height} board")
        if self.ball in self.men:
            raise ValueError(f"ball {self.ball} shares a cell with a man")
        off_board = sorted(c for c in self.men if not self.is_on_board(c))
        if off_board:
            raise ValueError(f"men off the board: {off_board[:5]}")
        return self

    def is_on_board(self, cell: tuple[int, int]) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def has_man(self, cell: tuple[int, int]) -> bool:
        return cell in self.men

    @property
    def man_count(self) -> int:
        return len(self.men)

    def scan_order(self) -> list[Coord]:
        """Men in text reading order: top row first, left to right."""
        return sorted(self.men, key=lambda c: (-c.y, c.x))

    def with_men(
        self,
        add: Iterable[tuple[int, int]] = (),
        remove: Iterable[tuple[int, int]] = (),
    ) -> "Board":
        """Edited copy; the only way men are placed outside of file input."""
        men = (set(self.men) - {Coord(*c) for c in remove}) | {Coord(*c) for c in add}
        return Board(width=self.width, height=self.height, ball=self.ball, men=frozenset(men))

    def with_ball(self, ball: tuple[int, int]) -> "Board":
        return Board(width=self.width, height=self.height, ball=Coord(*ball), men=self.men)

    def mirrored(self) -> "Board":
        """Reflection across the vertical centre axis."""
        flip = self.width - 1
        return Board(
            width=self.width,
            height=self.height,
            ball=Coord(flip - self.ball.x, self.ball.y),
            men=frozenset(Coord(flip - c.x, c.y) for c in self.men),
        )

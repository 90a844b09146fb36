"""
Endgame Checkers — Standard Board and the Diamond Mapping

A standard N x N board (N even) has its dark squares where file + rank
is even, a1 = (0, 0) being dark. The diamond view relabels dark square
(file, rank) as

    u = (file + rank) / 2
    v = (rank - file) / 2 + N/2 - 1

on a grid N cells wide and N - 1 cells tall. Only the labels change:
pieces keep their places and the rules are untouched. The forward
diagonals of a Black man, (file +/- 1, rank + 1), become +u and +v.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator

from endgame_checkers.errors import LightSquareError
from endgame_checkers.position import CheckersPosition, Color, Piece, Square


class StandardPosition(BaseModel):
    """Pieces on an N x N board, keyed by Square(file, rank)."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(8, ge=2)
    mover: Color = Color.BLACK
    pieces: tuple[Piece, ...] = ()

    @field_validator("size")
    @classmethod
    def even_size(cls, v: int) -> int:
        if v % 2:
            raise ValueError("board size must be even")
        return v


def is_dark(file: int, rank: int) -> bool:
    return (file + rank) % 2 == 0


def diamond_coords(file: int, rank: int, size: int) -> Square:
    if not is_dark(file, rank):
        raise LightSquareError(file, rank)
    return Square((file + rank) // 2, (rank - file) // 2 + size // 2 - 1)


def standard_coords(square: tuple[int, int], size: int) -> Square:
    """Inverse of diamond_coords: Square(file, rank)."""
    u, v = square
    half = size // 2
    return Square(u - v + half - 1, u + v - half + 1)


def diamond_unplayable(size: int) -> frozenset[Square]:
    """Cells of the N x (N-1) rectangle that are not squares of the board."""
    return frozenset(
        Square(u, v)
        for u in range(size)
        for v in range(size - 1)
        if not all(0 <= c < size for c in standard_coords((u, v), size))
    )


def to_diamond(position: StandardPosition) -> CheckersPosition:
    """
    Relabel a standard position in diamond coordinates.

    Raises:
        LightSquareError: a piece stands on a light square
    """
    size = position.size
    pieces = tuple(
        Piece(square=diamond_coords(p.square.x, p.square.y, size), color=p.color, king=p.king)
        for p in position.pieces
    )
    return CheckersPosition(
        width=size,
        height=size - 1,
        mover=position.mover,
        pieces=pieces,
        unplayable=diamond_unplayable(size),
    )


def from_diamond(position: CheckersPosition) -> StandardPosition:
    """
    Inverse of to_diamond for positions it produced.

    Raises:
        ValueError: the position is not the diamond view of a square board
    """
    size = position.width
    if position.height != size - 1 or position.unplayable != diamond_unplayable(size):
        raise ValueError(f"{position.width}x{position.height} grid is not a diamond view")
    return StandardPosition(
        size=size,
        mover=position.mover,
        pieces=tuple(
            Piece(square=standard_coords(p.square, size), color=p.color, king=p.king)
            for p in position.pieces
        ),
    )


def square_name(file: int, rank: int) -> str:
    """Algebraic name, a1 at file 0 rank 0."""
    return f"{chr(ord('a') + file)}{rank + 1}"


def to_standard_moves(landings: Sequence[tuple[int, int]], size: int) -> list[Square]:
    """Diamond cells of a jump path as standard (file, rank) squares."""
    return [standard_coords(cell, size) for cell in landings]


def describe_move(origin: tuple[int, int], landings: Iterable[tuple[int, int]], size: int) -> str:
    """Standard capture notation, e.g. 'c3xe5xc7'."""
    squares = to_standard_moves([origin, *landings], size)
    return "x".join(square_name(f, r) for f, r in squares)

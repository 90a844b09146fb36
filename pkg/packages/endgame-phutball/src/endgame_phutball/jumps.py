"""
Endgame Phutball — Jump Mechanics

A jump moves the ball in a straight line over a contiguous run of one
or more men to the first vacant intersection beyond them; the men jumped
are removed at once.
"""
from __future__ import annotations

from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict

from endgame_phutball.board import Board
from endgame_phutball.errors import IllegalJumpError
from endgame_phutball.geometry import (
    CANONICAL_ORDER,
    Coord,
    Direction,
    LandingStatus,
    landing_status,
)


class JumpOutcome(BaseModel):
    """Result of one legal jump from a given board."""

    model_config = ConfigDict(frozen=True)

    direction: Direction
    landing: Coord
    removed: frozenset[Coord]
    winning: bool


def jump_outcome(board: Board, direction: Direction) -> Optional[JumpOutcome]:
    """The jump in one direction, or None when there is no man to jump or the landing is illegal."""
    dx, dy = direction.value
    x, y = board.ball.x + dx, board.ball.y + dy
    men = board.men
    run: list[Coord] = []
    while (x, y) in men:
        run.append(Coord(x, y))
        x += dx
        y += dy
    if not run:
        return None
    status = landing_status(board.width, board.height, x, y)
    if status is LandingStatus.ILLEGAL:
        return None
    return JumpOutcome(
        direction=direction,
        landing=Coord(x, y),
        removed=frozenset(run),
        winning=status is LandingStatus.WIN,
    )


def legal_jumps(
    board: Board,
    directions: Iterable[Direction] = CANONICAL_ORDER,
) -> list[tuple[Direction, JumpOutcome]]:
    """
    Every legal jump from the ball, in the given direction order.

    Returns:
        (direction, outcome) pairs; empty when the ball has no jump
    """
    jumps = []
    for direction in directions:
        outcome = jump_outcome(board, direction)
        if outcome is not None:
            jumps.append((direction, outcome))
    return jumps


def apply_outcome(board: Board, outcome: JumpOutcome) -> Board:
    """Board after a non-winning outcome previously computed on this board."""
    # Landing is vacant and on-board, removed men are a subset: invariants hold.
    return Board.model_construct(
        width=board.width,
        height=board.height,
        ball=outcome.landing,
        men=board.men - outcome.removed,
    )


def apply_jump(board: Board, direction: Direction) -> Board:
    """
    Jump in the given direction.

    A winning jump ends the game, so it is refused here; solvers treat
    it as a leaf.

    Raises:
        IllegalJumpError: no legal jump in that direction, or the jump wins
    """
    outcome = jump_outcome(board, direction)
    if outcome is None:
        raise IllegalJumpError(direction.name, "no legal jump in this direction")
    if outcome.winning:
        raise IllegalJumpError(direction.name, "winning jump is terminal")
    return apply_outcome(board, outcome)

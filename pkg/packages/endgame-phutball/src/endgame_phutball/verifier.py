"""
Endgame Phutball — Jump Sequence Verifier

Polynomial-time certificate checker: replays a sequence landing by
landing. Every legal jump removes at least one man, so a valid sequence
is never longer than the starting man count.
"""
from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict

from endgame_phutball.board import Board
from endgame_phutball.geometry import Coord, Direction
from endgame_phutball.jumps import apply_outcome, jump_outcome
from endgame_phutball.sequence import JumpSequence


class VerifyStatus(str, Enum):
    VALID_WINNING = "valid-winning"
    VALID_NONWINNING = "valid-nonwinning"
    INVALID = "invalid"


class SequenceVerdict(BaseModel):
    """
    Outcome of verify_sequence().

    step is the 1-based index of the first illegal landing when status is
    INVALID. removed holds the men jumped by the valid prefix.
    """

    model_config = ConfigDict(frozen=True)

    status: VerifyStatus
    step: Optional[int] = None
    reason: Optional[str] = None
    final_ball: Coord
    removed: frozenset[Coord] = frozenset()

    @property
    def is_winning(self) -> bool:
        return self.status is VerifyStatus.VALID_WINNING

    def describe(self) -> str:
        if self.status is VerifyStatus.INVALID:
            return f"InvalidAtStep {self.step}: {self.reason}"
        if self.status is VerifyStatus.VALID_WINNING:
            return "ValidWinning"
        return "ValidNonwinning"


def verify_sequence(board: Board, sequence: JumpSequence) -> SequenceVerdict:
    """
    Replay a jump sequence from board.

    Each landing must be collinear with the ball, and the legal jump in
    that direction must land exactly there. A winning landing must be
    the last one.

    Returns:
        SequenceVerdict; the empty sequence is ValidNonwinning
    """
    current = board
    removed: set[Coord] = set()
    winning = False

    for step, landing in enumerate(sequence.landings, start=1):
        if winning:
            return _invalid(step, "sequence continues after a winning landing", current, removed)
        direction = Direction.from_delta(landing.x - current.ball.x, landing.y - current.ball.y)
        if direction is None:
            return _invalid(step, f"{landing} is not on a line through the ball", current, removed)
        outcome = jump_outcome(current, direction)
        if outcome is None:
            return _invalid(step, f"no legal jump {direction.name} from {current.ball}", current, removed)
        if outcome.landing != landing:
            return _invalid(
                step,
                f"jump {direction.name} lands on {outcome.landing}, not {landing}",
                current,
                removed,
            )
        removed |= outcome.removed
        if outcome.winning:
            winning = True
            final_ball = outcome.landing
        else:
            current = apply_outcome(current, outcome)

    if winning:
        return SequenceVerdict(
            status=VerifyStatus.VALID_WINNING,
            final_ball=final_ball,
            removed=frozenset(removed),
        )
    return SequenceVerdict(
        status=VerifyStatus.VALID_NONWINNING,
        final_ball=current.ball,
        removed=frozenset(removed),
    )


def _invalid(step: int, reason: str, current: Board, removed: set[Coord]) -> SequenceVerdict:
    return SequenceVerdict(
        status=VerifyStatus.INVALID,
        step=step,
        reason=reason,
        final_ball=current.ball,
        removed=frozenset(removed),
    )

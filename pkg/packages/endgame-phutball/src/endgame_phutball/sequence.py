"""
Endgame Phutball — Jump Sequences

A jump sequence is the ordered list of ball landings within one move;
it is the certificate for a winning move. Text form is one line of
space-separated ``x,y`` landings (y may reach or exceed H for a landing
over the goal line).
"""
from __future__ import annotations

from typing import Iterable

from pydantic import BaseModel, ConfigDict

from endgame_phutball.errors import SequenceFormatError
from endgame_phutball.geometry import Coord


class JumpSequence(BaseModel):
    """Ordered landing coordinates of the ball."""

    model_config = ConfigDict(frozen=True)

    landings: tuple[Coord, ...] = ()

    @classmethod
    def of(cls, landings: Iterable[tuple[int, int]]) -> "JumpSequence":
        return cls(landings=tuple(Coord(*c) for c in landings))

    def __len__(self) -> int:
        return len(self.landings)

    @property
    def final(self) -> Coord | None:
        return self.landings[-1] if self.landings else None

    def extended(self, landing: Coord) -> "JumpSequence":
        return JumpSequence(landings=self.landings + (landing,))


def parse_sequence(text: str) -> JumpSequence:
    """
    Parse ``x,y x,y ...``; blank text is the empty sequence.

    Raises:
        SequenceFormatError: a token that is not two comma-separated integers
    """
    landings = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise SequenceFormatError(token, "expected x,y")
        try:
            landings.append(Coord(int(parts[0]), int(parts[1])))
        except ValueError:
            raise SequenceFormatError(token, "coordinates must be integers") from None
    return JumpSequence(landings=tuple(landings))


def render_sequence(sequence: JumpSequence) -> str:
    return " ".join(f"{c.x},{c.y}" for c in sequence.landings)

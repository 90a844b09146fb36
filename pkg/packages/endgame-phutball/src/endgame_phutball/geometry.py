"""
Endgame Phutball — Geometry

Coordinates, the eight jump directions and the landing predicate.

Convention: x grows rightward, y grows toward the opponent's goal. The
mover's own goal line is row 0 and the opponent's is row H-1.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple


class Coord(NamedTuple):
    """Board intersection; off-board values are representable."""
    x: int
    y: int

    def step(self, direction: "Direction", distance: int = 1) -> "Coord":
        return Coord(self.x + direction.dx * distance, self.y + direction.dy * distance)

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


class Direction(Enum):
    """The eight king-move unit vectors, declared in canonical search order."""
    N = (0, 1)
    NE = (1, 1)
    E = (1, 0)
    SE = (1, -1)
    S = (0, -1)
    SW = (-1, -1)
    W = (-1, 0)
    NW = (-1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def is_orthogonal(self) -> bool:
        return self.dx == 0 or self.dy == 0

    def mirrored(self) -> "Direction":
        """Reflection across a vertical axis (x -> -x)."""
        return Direction((-self.dx, self.dy))

    def flipped(self) -> "Direction":
        """Reflection across a horizontal axis (y -> -y)."""
        return Direction((self.dx, -self.dy))

    def opposite(self) -> "Direction":
        return Direction((-self.dx, -self.dy))

    @classmethod
    def from_delta(cls, dx: int, dy: int) -> "Direction | None":
        """Direction of a straight line from the origin to (dx, dy), if any."""
        if dx == 0 and dy == 0:
            return None
        if dx != 0 and dy != 0 and abs(dx) != abs(dy):
            return None
        return cls(((dx > 0) - (dx < 0), (dy > 0) - (dy < 0)))


CANONICAL_ORDER: tuple[Direction, ...] = tuple(Direction)
ORTHOGONAL: tuple[Direction, ...] = tuple(d for d in Direction if d.is_orthogonal)


class LandingStatus(str, Enum):
    """Where a jump may end."""
    ILLEGAL = "illegal"   # off a side edge or behind the mover's own goal line
    OPEN = "open"         # an on-board intersection short of the goal row
    WIN = "win"           # on or over the opponent's goal line


def landing_status(width: int, height: int, x: int, y: int) -> LandingStatus:
    """
    Classify a landing cell.

    Side-edge and own-goal overshoots are illegal; row 0 itself is fine.
    Row H-1 and anything beyond it wins.
    """
    if x < 0 or x >= width or y < 0:
        return LandingStatus.ILLEGAL
    if y >= height - 1:
        return LandingStatus.WIN
    return LandingStatus.OPEN

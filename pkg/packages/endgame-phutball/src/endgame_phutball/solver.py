"""
Endgame Phutball — Jump Solver

Mate-in-one decision by depth-first search over (ball, removed men)
states, plus exhaustive sequence enumeration for gadget checks and
small-board oracles.

INVARIANT: the removed set is a bitmask over the starting men indexed in
scan order (top row first, left to right), so a state key is
(ball x, ball y, mask). The reachable future depends only on that key,
which is what makes the memo table sound.
"""
from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from endgame_phutball.board import Board
from endgame_phutball.errors import EnumerationLimitError, PhutballError
from endgame_phutball.geometry import (
    CANONICAL_ORDER,
    Coord,
    Direction,
    LandingStatus,
    landing_status,
)
from endgame_phutball.sequence import JumpSequence
from endgame_phutball.verifier import verify_sequence

logger = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 2_000_000
DEFAULT_ENUMERATION_CAP = 200_000


# =============================================================================
# Options & Results
# =============================================================================

class SearchOptions(BaseModel):
    """Solver knobs; orthogonal_only restricts jumps to N, E, S, W."""

    model_config = ConfigDict(frozen=True)

    orthogonal_only: bool = False
    node_limit: int = Field(DEFAULT_NODE_LIMIT, ge=1)
    direction_order: tuple[Direction, ...] = CANONICAL_ORDER

    @field_validator("direction_order")
    @classmethod
    def validate_order(cls, v: tuple[Direction, ...]) -> tuple[Direction, ...]:
        if not v:
            raise ValueError("direction_order must not be empty")
        if len(set(v)) != len(v):
            raise ValueError("direction_order repeats a direction")
        return v

    def directions(self) -> tuple[Direction, ...]:
        if self.orthogonal_only:
            return tuple(d for d in self.direction_order if d.is_orthogonal)
        return self.direction_order


class SearchResult(BaseModel):
    """found is present only for a verified winning sequence."""

    model_config = ConfigDict(frozen=True)

    found: Optional[JumpSequence] = None
    nodes_expanded: int
    exhausted: bool

    @property
    def limit_hit(self) -> bool:
        return self.found is None and not self.exhausted


class EnumeratedSequence(BaseModel):
    """One enumerated sequence with the state it leaves behind."""

    model_config = ConfigDict(frozen=True)

    sequence: JumpSequence
    ball: Coord
    removed: frozenset[Coord]
    winning: bool


# =============================================================================
# Kernel
# =============================================================================

class _JumpIndex:
    """Men of a fixed starting board, addressed by scan-order bit."""

    def __init__(self, board: Board):
        self.width = board.width
        self.height = board.height
        self.men = board.scan_order()
        self.index = {man: i for i, man in enumerate(self.men)}

    def jump(
        self, x: int, y: int, removed: int, dx: int, dy: int
    ) -> Optional[tuple[int, int, int, LandingStatus]]:
        """(landing x, landing y, bits jumped, status) or None."""
        index = self.index
        x += dx
        y += dy
        bits = 0
        i = index.get((x, y))
        while i is not None and not removed >> i & 1:
            bits |= 1 << i
            x += dx
            y += dy
            i = index.get((x, y))
        if not bits:
            return None
        status = landing_status(self.width, self.height, x, y)
        if status is LandingStatus.ILLEGAL:
            return None
        return x, y, bits, status

    def coords(self, mask: int) -> frozenset[Coord]:
        return frozenset(man for i, man in enumerate(self.men) if mask >> i & 1)


# =============================================================================
# Search
# =============================================================================

def find_winning_sequence(board: Board, options: Optional[SearchOptions] = None) -> SearchResult:
    """
    Decide whether the mover has a winning jump sequence.

    Depth-first in canonical direction order, stopping at the first win.
    Each distinct state is expanded at most once; nodes_expanded counts
    expanded states including the start, so a board without men reports 1.

    Returns:
        SearchResult; exhausted=False means node_limit was reached first

    Raises:
        PhutballError: a found sequence failed re-verification
    """
    options = options or SearchOptions()
    deltas = [d.value for d in options.directions()]
    kernel = _JumpIndex(board)

    start = (board.ball.x, board.ball.y, 0)
    visited = {start}
    nodes = 1
    path: list[Coord] = []
    stack: list[list[int]] = [[board.ball.x, board.ball.y, 0, 0]]

    while stack:
        frame = stack[-1]
        x, y, removed, k = frame
        if k == len(deltas):
            stack.pop()
            if path:
                path.pop()
            continue
        frame[3] = k + 1

        jump = kernel.jump(x, y, removed, *deltas[k])
        if jump is None:
            continue
        lx, ly, bits, status = jump
        if status is LandingStatus.WIN:
            found = JumpSequence(landings=(*path, Coord(lx, ly)))
            if not verify_sequence(board, found).is_winning:
                raise PhutballError(f"solver produced an unverifiable sequence after {nodes} nodes")
            logger.debug("win found after %d nodes, %d jumps", nodes, len(found))
            return SearchResult(found=found, nodes_expanded=nodes, exhausted=False)

        state = (lx, ly, removed | bits)
        if state in visited:
            continue
        if nodes >= options.node_limit:
            logger.info("node limit %d reached", options.node_limit)
            return SearchResult(found=None, nodes_expanded=nodes, exhausted=False)
        visited.add(state)
        nodes += 1
        path.append(Coord(lx, ly))
        stack.append([lx, ly, removed | bits, 0])

    logger.debug("search exhausted after %d nodes without a win", nodes)
    return SearchResult(found=None, nodes_expanded=nodes, exhausted=True)


def enumerate_sequences(
    board: Board,
    max_len: Optional[int] = None,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    orthogonal_only: bool = False,
) -> list[EnumeratedSequence]:
    """
    Every jump sequence of at most max_len jumps, in depth-first order.

    The list is prefix-closed: it starts with the empty sequence and
    holds every prefix of every sequence, since a move may stop after any
    jump. Winning sequences are leaves.

    Raises:
        EnumerationLimitError: more than cap sequences
    """
    directions = [d for d in CANONICAL_ORDER if d.is_orthogonal or not orthogonal_only]
    deltas = [d.value for d in directions]
    kernel = _JumpIndex(board)
    limit = max_len if max_len is not None else len(kernel.men)

    records = [
        EnumeratedSequence(
            sequence=JumpSequence(), ball=board.ball, removed=frozenset(), winning=False
        )
    ]
    path: list[Coord] = []
    stack: list[list[int]] = [[board.ball.x, board.ball.y, 0, 0]]

    while stack:
        frame = stack[-1]
        x, y, removed, k = frame
        if k == len(deltas) or len(path) >= limit:
            stack.pop()
            if path:
                path.pop()
            continue
        frame[3] = k + 1

        jump = kernel.jump(x, y, removed, *deltas[k])
        if jump is None:
            continue
        lx, ly, bits, status = jump
        landing = Coord(lx, ly)
        winning = status is LandingStatus.WIN
        records.append(
            EnumeratedSequence(
                sequence=JumpSequence(landings=(*path, landing)),
                ball=landing,
                removed=kernel.coords(removed | bits),
                winning=winning,
            )
        )
        if len(records) > cap:
            raise EnumerationLimitError(len(records), cap)
        if not winning:
            path.append(landing)
            stack.append([lx, ly, removed | bits, 0])

    return records


def reference_search(board: Board, *, orthogonal_only: bool = False) -> bool:
    """Memo-free exhaustive check for a winning sequence (small boards only)."""
    directions = [d.value for d in CANONICAL_ORDER if d.is_orthogonal or not orthogonal_only]
    kernel = _JumpIndex(board)

    def wins_from(x: int, y: int, removed: int) -> bool:
        for dx, dy in directions:
            jump = kernel.jump(x, y, removed, dx, dy)
            if jump is None:
                continue
            lx, ly, bits, status = jump
            if status is LandingStatus.WIN or wins_from(lx, ly, removed | bits):
                return True
        return False

    return wins_from(board.ball.x, board.ball.y, 0)

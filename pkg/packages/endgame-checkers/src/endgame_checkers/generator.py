"""
Endgame Checkers — Seeded Random Positions

Positions are drawn on a standard board and relabelled into diamond view,
so every generated position is a real checkers position.
"""
from __future__ import annotations

import random
from typing import Optional

from endgame_checkers.diamond import StandardPosition, is_dark, to_diamond
from endgame_checkers.position import CheckersPosition, Color, Piece, Square

KING_PROBABILITY = 0.3


def _king_rank(color: Color, size: int) -> int:
    return size - 1 if color is Color.BLACK else 0


def random_position(
    rng: random.Random,
    size: int = 8,
    max_opponents: int = 6,
    max_friends: int = 3,
) -> CheckersPosition:
    """
    A random diamond-view position of an N x N board.

    The mover gets 1..max_friends pieces and the other side
    1..max_opponents. Each piece is a king with probability 0.3; men are
    crowned when drawn on their own king rank.
    """
    if size % 2 or size < 4:
        raise ValueError("size must be an even number >= 4")
    mover = rng.choice((Color.BLACK, Color.WHITE))
    dark = [Square(f, r) for r in range(size) for f in range(size) if is_dark(f, r)]
    friends = rng.randint(1, max_friends)
    opponents = rng.randint(1, max_opponents)
    chosen = rng.sample(dark, min(len(dark), friends + opponents))

    pieces = []
    for index, square in enumerate(chosen):
        color = mover if index < friends else mover.opponent
        king = rng.random() < KING_PROBABILITY or square.y == _king_rank(color, size)
        pieces.append(Piece(square=square, color=color, king=king))

    return to_diamond(StandardPosition(size=size, mover=mover, pieces=tuple(pieces)))


def random_positions(seed: int, count: int, sizes: tuple[int, ...] = (4, 6, 8), **kwargs) -> list[CheckersPosition]:
    """count positions from one random.Random(seed); the size is drawn first for each."""
    rng = random.Random(seed)
    return [random_position(rng, rng.choice(sizes), **kwargs) for _ in range(count)]


# =============================================================================
# Capture chains
# =============================================================================

DIAGONALS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def _on_board(square: Square, size: int) -> bool:
    return 0 <= square.x < size and 0 <= square.y < size


def capture_chain_position(
    rng: random.Random,
    size: int = 8,
    *,
    king: Optional[bool] = None,
    max_jumps: int = 4,
    extra_pieces: int = 0,
) -> CheckersPosition:
    """
    A position built backwards from a capture sequence of the mover.

    One mover piece walks a random chain of jumps and an opposing piece is
    placed on every square it jumps. A man starts an even number of ranks
    below its king row and jumps forward until it is crowned, so its chain
    always kings. With extra_pieces=0 the chain takes every opposing piece
    and the position is a one-move win. Extra pieces of either colour go
    on squares the chain never touches.
    """
    if size % 2 or size < 4:
        raise ValueError("size must be an even number >= 4")
    mover = rng.choice((Color.BLACK, Color.WHITE))
    if king is None:
        king = rng.random() < 0.5

    if king:
        jumps = rng.randint(1, max_jumps)
        rank = rng.randrange(size)
        steps = DIAGONALS
    else:
        jumps = rng.randint(1, min(max_jumps, (size - 1) // 2))
        rank = _king_rank(mover, size) - 2 * jumps * (1 if mover is Color.BLACK else -1)
        forward = 1 if mover is Color.BLACK else -1
        steps = ((1, forward), (-1, forward))
    origin = Square(rng.choice([f for f in range(size) if is_dark(f, rank)]), rank)

    captured: list[Square] = []
    landed = {origin}
    current = origin
    for _ in range(jumps):
        options = []
        for dx, dy in steps:
            over, landing = current.shifted(dx, dy), current.shifted(dx, dy, 2)
            if not _on_board(landing, size) or over in landed or over in captured:
                continue
            if landing in captured:
                continue
            options.append((over, landing))
        if not options:
            break
        over, current = rng.choice(options)
        captured.append(over)
        landed.add(current)

    opponent = mover.opponent
    pieces = [Piece(square=origin, color=mover, king=king)]
    for square in captured:
        crowned = rng.random() < KING_PROBABILITY or square.y == _king_rank(opponent, size)
        pieces.append(Piece(square=square, color=opponent, king=crowned))

    free = [
        Square(f, r)
        for r in range(size)
        for f in range(size)
        if is_dark(f, r) and Square(f, r) not in landed and Square(f, r) not in captured
    ]
    for square in rng.sample(free, min(len(free), extra_pieces)):
        color = rng.choice((mover, opponent))
        crowned = rng.random() < KING_PROBABILITY or square.y == _king_rank(color, size)
        pieces.append(Piece(square=square, color=color, king=crowned))

    return to_diamond(StandardPosition(size=size, mover=mover, pieces=tuple(pieces)))


def suite_position(
    rng: random.Random,
    index: int,
    sizes: tuple[int, ...] = (4, 6, 8),
    max_opponents: int = 6,
) -> CheckersPosition:
    """
    Position number index of a seeded suite.

    Odd indices are uniform random positions. Even indices are capture
    chains cycling through man/king movers and 0, 1 or 2 extra pieces, so
    a suite of count positions holds at least count // 6 one-move wins
    and count // 4 men that can king.
    """
    size = rng.choice(sizes)
    if index % 2:
        return random_position(rng, size, max_opponents=max_opponents)
    chain = index // 2
    return capture_chain_position(rng, size, king=chain % 2 == 1, extra_pieces=chain % 3)


def suite_positions(
    seed: int,
    count: int,
    sizes: tuple[int, ...] = (4, 6, 8),
    max_opponents: int = 6,
) -> list[CheckersPosition]:
    rng = random.Random(seed)
    return [suite_position(rng, index, sizes, max_opponents) for index in range(count)]

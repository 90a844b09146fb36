"""
Endgame Checkers — Brute-Force Oracle

Enumerates every maximal capture sequence of a piece by playing it out:
jumped pieces stay on the board as blockers until the move ends, and a
man that lands on its king row stops. Exponential; used to cross-check
the jump-graph analysis on small boards.
"""
from __future__ import annotations

import logging

from endgame_checkers.errors import AlreadyKingError, OracleExplosionError
from endgame_checkers.graph import find_piece
from endgame_checkers.position import CheckersPosition, Color, Piece, Square

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 200_000


def brute_force_oracle(
    position: CheckersPosition,
    square: tuple[int, int],
    *,
    cap: int = DEFAULT_ORACLE_CAP,
) -> list[tuple[Square, ...]]:
    """
    All maximal capture sequences of the mover's piece on a square.

    Each sequence is its tuple of landing cells. A piece with no capture
    yields the single empty sequence.

    Raises:
        PieceNotFoundError: no piece of the side to move there
        OracleExplosionError: more than `cap` sequences
    """
    piece = find_piece(position, square, position.mover)
    found: list[tuple[Square, ...]] = []
    _extend(position, piece, piece.square, (), frozenset(), found, cap)
    logger.debug("oracle: %d sequences for %s", len(found), piece.square)
    return found


def _extend(
    position: CheckersPosition,
    piece: Piece,
    cell: Square,
    landings: tuple[Square, ...],
    captured: frozenset[Square],
    found: list[tuple[Square, ...]],
    cap: int,
) -> None:
    stopped = bool(landings) and not piece.king and position.is_king_row(cell, piece.color)
    extended = False
    if not stopped:
        for dx, dy in piece.steps():
            over = cell.shifted(dx, dy)
            landing = cell.shifted(dx, dy, 2)
            target = position.piece_at(over)
            if target is None or target.color is piece.color or over in captured:
                continue
            if not position.is_playable(landing):
                continue
            if landing != piece.square and position.piece_at(landing) is not None:
                continue
            extended = True
            _extend(position, piece, landing, landings + (landing,), captured | {over}, found, cap)
    if not extended:
        found.append(landings)
        if len(found) > cap:
            raise OracleExplosionError(len(found), cap)


def oracle_can_king(position: CheckersPosition, square: tuple[int, int], **kwargs) -> bool:
    """
    Raises:
        AlreadyKingError: the piece is a king
    """
    piece = find_piece(position, square, position.mover)
    if piece.king:
        raise AlreadyKingError(piece.square)
    return any(
        seq and position.is_king_row(seq[-1], piece.color)
        for seq in brute_force_oracle(position, square, **kwargs)
    )


def oracle_one_move_win(position: CheckersPosition, color: Color | None = None, **kwargs) -> bool:
    color = color or position.mover
    opponents = len(position.pieces_of(color.opponent))
    if opponents == 0:
        return False
    side = position if color is position.mover else position.model_copy(update={"mover": color})
    return any(
        len(seq) == opponents
        for piece in side.pieces_of(color)
        for seq in brute_force_oracle(side, piece.square, **kwargs)
    )

"""
Endgame Checkers — Single-Move Analysis

Both questions are answered on the jump graph in time polynomial in the
board area:

- can_king: a man kings iff its directed jump graph has a path from its
  square to a cell on its king row.
- has_one_move_win: a side wins in one move iff some piece p has a jump
  graph that contains every opposing piece and has an Euler path
  starting at p's square. Undirected (kings): connected and at most one
  odd-degree vertex besides the origin. Directed (men): the origin has
  one more out-edge than in-edges, exactly one vertex has one more
  in-edge than out-edges, and every other vertex is balanced.
"""
from __future__ import annotations

import logging
from typing import Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict

from endgame_checkers.errors import AlreadyKingError
from endgame_checkers.graph import CELL, JumpGraph, build_jump_graph, find_piece
from endgame_checkers.position import CheckersPosition, Color, Square

logger = logging.getLogger(__name__)


class KingVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    square: Square
    reachable: bool
    landings: tuple[Square, ...] = ()


class WinVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    color: Color
    winning: bool
    piece: Optional[Square] = None
    landings: tuple[Square, ...] = ()


class PieceDiagnostics(BaseModel):
    model_config = ConfigDict(frozen=True)

    square: Square
    king: bool
    cells: int
    jumpable: int
    covers_all: bool
    euler_path: bool
    can_king: Optional[bool] = None


class AnalyzerVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    mover: Color
    can_king: bool
    king_witness: Optional[KingVerdict] = None
    one_move_win: WinVerdict
    pieces: tuple[PieceDiagnostics, ...] = ()


# =============================================================================
# Kinging
# =============================================================================

def can_king(position: CheckersPosition, square: tuple[int, int]) -> KingVerdict:
    """
    Whether the mover's man on a square can reach its king row by jumping.

    The witness stops at the first king-row cell, since kinging ends the move.

    Raises:
        PieceNotFoundError: no piece of the side to move there
        AlreadyKingError: the piece is a king
    """
    piece = find_piece(position, square, position.mover)
    if piece.king:
        raise AlreadyKingError(piece.square)
    jump_graph = build_jump_graph(position, piece.square)
    return _king_verdict(position, jump_graph)


def _king_verdict(position: CheckersPosition, jump_graph: JumpGraph) -> KingVerdict:
    origin = jump_graph.origin
    graph = jump_graph.graph
    paths = nx.single_source_shortest_path(graph, origin)
    targets = sorted(
        node for node in paths
        if node != origin
        and graph.nodes[node]["bipartite"] == CELL
        and position.is_king_row(node, jump_graph.color)
    )
    if not targets:
        return KingVerdict(square=origin, reachable=False)
    path = paths[targets[0]]
    return KingVerdict(square=origin, reachable=True, landings=tuple(_cells(graph, path[1:])))


# =============================================================================
# One-move win
# =============================================================================

def has_euler_path_from(jump_graph: JumpGraph) -> bool:
    """Euler-path condition for a walk starting at the origin."""
    graph = jump_graph.graph
    origin = jump_graph.origin
    if graph.number_of_edges() == 0:
        return False

    if jump_graph.directed:
        if not nx.is_weakly_connected(graph):
            return False
        surplus = {node: graph.out_degree(node) - graph.in_degree(node) for node in graph}
        if surplus[origin] != 1:
            return False
        sinks = [node for node, s in surplus.items() if s == -1]
        others = [node for node, s in surplus.items() if s not in (0, 1, -1)]
        extra_sources = [node for node, s in surplus.items() if s == 1 and node != origin]
        return len(sinks) == 1 and not others and not extra_sources

    if not nx.is_connected(graph):
        return False
    odd = [node for node in graph if graph.degree(node) % 2 == 1 and node != origin]
    return len(odd) <= 1


def euler_landings(jump_graph: JumpGraph) -> tuple[Square, ...]:
    """Landing cells of an Euler path from the origin; empty when none exists."""
    if not has_euler_path_from(jump_graph):
        return ()
    edges = list(nx.eulerian_path(jump_graph.graph, source=jump_graph.origin))
    walk = [edges[0][0]] + [v for _, v in edges]
    return tuple(_cells(jump_graph.graph, walk[1:]))


def has_one_move_win(position: CheckersPosition, color: Color | None = None) -> WinVerdict:
    """
    Whether a side can jump every opposing piece in a single move.

    The side defaults to the mover; its pieces are tried in square order
    and the first winner supplies the witness.
    """
    color = color or position.mover
    opponents = {p.square for p in position.pieces_of(color.opponent)}
    if not opponents:
        return WinVerdict(color=color, winning=False)
    side = position if color is position.mover else position.model_copy(update={"mover": color})
    for piece in side.pieces_of(color):
        jump_graph = build_jump_graph(side, piece.square)
        if not opponents.issubset(jump_graph.pieces):
            continue
        landings = euler_landings(jump_graph)
        if landings:
            logger.debug("one-move win for %s from %s", color.value, piece.square)
            return WinVerdict(color=color, winning=True, piece=piece.square, landings=landings)
    return WinVerdict(color=color, winning=False)


def analyze(position: CheckersPosition) -> AnalyzerVerdict:
    """Both tests for the side to move, with per-piece diagnostics."""
    opponents = {p.square for p in position.pieces_of(position.mover.opponent)}
    diagnostics = []
    king_witness: Optional[KingVerdict] = None
    for piece in position.pieces_of(position.mover):
        jump_graph = build_jump_graph(position, piece.square)
        kinging = None
        if not piece.king:
            verdict = _king_verdict(position, jump_graph)
            kinging = verdict.reachable
            if verdict.reachable and king_witness is None:
                king_witness = verdict
        diagnostics.append(
            PieceDiagnostics(
                square=piece.square,
                king=piece.king,
                cells=len(jump_graph.cells),
                jumpable=len(jump_graph.pieces),
                covers_all=bool(opponents) and opponents.issubset(jump_graph.pieces),
                euler_path=has_euler_path_from(jump_graph),
                can_king=kinging,
            )
        )
    return AnalyzerVerdict(
        mover=position.mover,
        can_king=king_witness is not None,
        king_witness=king_witness,
        one_move_win=has_one_move_win(position),
        pieces=tuple(diagnostics),
    )


def _cells(graph: nx.Graph, nodes) -> list[Square]:
    return [Square(*n) for n in nodes if graph.nodes[n]["bipartite"] == CELL]

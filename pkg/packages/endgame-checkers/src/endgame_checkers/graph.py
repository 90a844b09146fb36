"""
Endgame Checkers — Jump Graph

The jump graph of a piece p is bipartite: on one side the vacant cells p
can reach by jumping, on the other the opposing pieces p can jump. A
jumpable piece is joined to the two cells flanking it along the axis of
the jump. Jumps preserve the parity of both coordinates, so every cell
vertex shares p's parity and each jumpable piece has degree exactly two.

Men get a directed graph (no backward moves, and a cell on the man's
king row has no out-edges because kinging ends the move); kings get an
undirected one.
"""
from __future__ import annotations

import logging
from collections import deque

import networkx as nx
from pydantic import BaseModel, ConfigDict

from endgame_checkers.errors import PieceNotFoundError
from endgame_checkers.position import CheckersPosition, Color, Piece, Square

logger = logging.getLogger(__name__)

CELL = 0
PIECE = 1


class JumpGraph(BaseModel):
    """G_p for one piece. Nodes are Squares tagged with bipartite=CELL or PIECE."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    origin: Square
    color: Color
    king: bool
    graph: nx.Graph

    @property
    def cells(self) -> list[Square]:
        return [n for n, side in self.graph.nodes(data="bipartite") if side == CELL]

    @property
    def pieces(self) -> list[Square]:
        return [n for n, side in self.graph.nodes(data="bipartite") if side == PIECE]

    @property
    def directed(self) -> bool:
        return self.graph.is_directed()

    def degree(self, node: Square) -> int:
        return self.graph.degree(node)


def find_piece(position: CheckersPosition, square: tuple[int, int], color: Color | None = None) -> Piece:
    piece = position.piece_at(square)
    if piece is None or (color is not None and piece.color is not color):
        raise PieceNotFoundError(tuple(square))
    return piece


def jump_edges(position: CheckersPosition, piece: Piece) -> list[tuple[Square, Square, Square]]:
    """
    Every (from cell, jumped piece, landing cell) reachable from the piece's square.

    Breadth-first from the origin; p's own square counts as vacant once p
    has left it.
    """
    origin = piece.square
    opponent = piece.color.opponent

    def vacant(sq: Square) -> bool:
        return position.is_playable(sq) and (sq == origin or position.piece_at(sq) is None)

    edges: list[tuple[Square, Square, Square]] = []
    seen = {origin}
    queue = deque([origin])
    while queue:
        cell = queue.popleft()
        if not piece.king and cell != origin and position.is_king_row(cell, piece.color):
            continue
        for dx, dy in piece.steps():
            over = cell.shifted(dx, dy)
            landing = cell.shifted(dx, dy, 2)
            target = position.piece_at(over)
            if target is None or target.color is not opponent or not vacant(landing):
                continue
            edges.append((cell, over, landing))
            if landing not in seen:
                seen.add(landing)
                queue.append(landing)
    return edges


def build_jump_graph(position: CheckersPosition, square: tuple[int, int]) -> JumpGraph:
    """
    G_p for the mover's piece on a square.

    Raises:
        PieceNotFoundError: no piece of the side to move on that square
    """
    piece = find_piece(position, square, position.mover)
    edges = jump_edges(position, piece)

    graph: nx.Graph = nx.Graph() if piece.king else nx.DiGraph()
    nodes = {piece.square: CELL}
    for cell, over, landing in edges:
        nodes[cell] = CELL
        nodes[over] = PIECE
        nodes[landing] = CELL
    for node in sorted(nodes):
        graph.add_node(node, bipartite=nodes[node])
    for cell, over, landing in sorted(edges):
        graph.add_edge(cell, over)
        graph.add_edge(over, landing)

    logger.debug(
        "jump graph of %s at %s: %d nodes, %d edges",
        piece.color.value, piece.square, graph.number_of_nodes(), graph.number_of_edges(),
    )
    return JumpGraph(origin=piece.square, color=piece.color, king=piece.king, graph=graph)

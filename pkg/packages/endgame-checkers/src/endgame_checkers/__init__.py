"""
Endgame Checkers — Single-Move Analyzer

Decides in polynomial time whether a man can king and whether a side can
jump every opposing piece in one move, using the diamond view of the
board and the bipartite jump graph of each piece.

Package Structure:
- position.py  - Square, Color, Piece, CheckersPosition (diamond view)
- diamond.py   - StandardPosition and the standard <-> diamond mapping
- graph.py     - JumpGraph construction (networkx)
- analysis.py  - can_king(), has_one_move_win(), analyze()
- oracle.py    - brute-force capture enumeration for cross-checks
- generator.py - seeded random positions
- textio.py    - position text formats
- errors.py    - CheckersError hierarchy

Design Principles:
1. NO imports from sibling endgame packages
2. Positions are immutable; analysis never mutates them
3. The oracle plays moves out and shares no code with the graph tests
"""
from __future__ import annotations

from endgame_checkers.errors import (
    CheckersError,
    PositionFormatError,
    LightSquareError,
    PieceNotFoundError,
    AlreadyKingError,
    OracleExplosionError,
)
from endgame_checkers.position import (
    AXES,
    Square,
    Color,
    Piece,
    CheckersPosition,
)
from endgame_checkers.diamond import (
    StandardPosition,
    is_dark,
    diamond_coords,
    standard_coords,
    diamond_unplayable,
    to_diamond,
    from_diamond,
    square_name,
    to_standard_moves,
    describe_move,
)
from endgame_checkers.graph import (
    CELL,
    PIECE,
    JumpGraph,
    find_piece,
    jump_edges,
    build_jump_graph,
)
from endgame_checkers.analysis import (
    KingVerdict,
    WinVerdict,
    PieceDiagnostics,
    AnalyzerVerdict,
    can_king,
    has_euler_path_from,
    euler_landings,
    has_one_move_win,
    analyze,
)
from endgame_checkers.oracle import (
    DEFAULT_ORACLE_CAP,
    brute_force_oracle,
    oracle_can_king,
    oracle_one_move_win,
)
from endgame_checkers.generator import (
    capture_chain_position,
    random_position,
    random_positions,
    suite_position,
    suite_positions,
)
from endgame_checkers.textio import (
    parse_position,
    render_position,
    parse_standard,
    render_standard,
)

__all__ = [
    # Errors
    "CheckersError",
    "PositionFormatError",
    "LightSquareError",
    "PieceNotFoundError",
    "AlreadyKingError",
    "OracleExplosionError",
    # Position
    "AXES",
    "Square",
    "Color",
    "Piece",
    "CheckersPosition",
    # Diamond view
    "StandardPosition",
    "is_dark",
    "diamond_coords",
    "standard_coords",
    "diamond_unplayable",
    "to_diamond",
    "from_diamond",
    "square_name",
    "to_standard_moves",
    "describe_move",
    # Jump graph
    "CELL",
    "PIECE",
    "JumpGraph",
    "find_piece",
    "jump_edges",
    "build_jump_graph",
    # Analysis
    "KingVerdict",
    "WinVerdict",
    "PieceDiagnostics",
    "AnalyzerVerdict",
    "can_king",
    "has_euler_path_from",
    "euler_landings",
    "has_one_move_win",
    "analyze",
    # Oracle
    "DEFAULT_ORACLE_CAP",
    "brute_force_oracle",
    "oracle_can_king",
    "oracle_one_move_win",
    # Generator
    "random_position",
    "random_positions",
    "capture_chain_position",
    "suite_position",
    "suite_positions",
    # Text
    "parse_position",
    "render_position",
    "parse_standard",
    "render_standard",
]

__version__ = "1.0.0"

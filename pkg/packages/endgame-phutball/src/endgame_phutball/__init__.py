"""
Endgame Phutball — Board Model, Jump Mechanics and Solver

Package Structure:
- geometry.py - Coord, Direction, landing predicate
- board.py    - Board (immutable position)
- jumps.py    - legal_jumps(), apply_jump()
- sequence.py - JumpSequence and its text form
- verifier.py - verify_sequence() certificate checker
- textio.py   - parse_board() / render_board()
- svg.py      - render_svg()
- solver.py   - find_winning_sequence(), enumerate_sequences()

Design Principles:
1. NO imports from sibling endgame packages
2. Boards are values; every operation returns a new one
3. The mover always attacks row H-1
"""
from __future__ import annotations

from endgame_phutball.errors import (
    PhutballError,
    BoardFormatError,
    SequenceFormatError,
    IllegalJumpError,
    EnumerationLimitError,
)
from endgame_phutball.geometry import (
    Coord,
    Direction,
    CANONICAL_ORDER,
    ORTHOGONAL,
    LandingStatus,
    landing_status,
)
from endgame_phutball.board import Board
from endgame_phutball.jumps import (
    JumpOutcome,
    jump_outcome,
    legal_jumps,
    apply_jump,
    apply_outcome,
)
from endgame_phutball.sequence import JumpSequence, parse_sequence, render_sequence
from endgame_phutball.verifier import VerifyStatus, SequenceVerdict, verify_sequence
from endgame_phutball.textio import parse_board, render_board
from endgame_phutball.svg import render_svg
from endgame_phutball.solver import (
    DEFAULT_NODE_LIMIT,
    DEFAULT_ENUMERATION_CAP,
    SearchOptions,
    SearchResult,
    EnumeratedSequence,
    find_winning_sequence,
    enumerate_sequences,
    reference_search,
)

__all__ = [
    # Errors
    "PhutballError",
    "BoardFormatError",
    "SequenceFormatError",
    "IllegalJumpError",
    "EnumerationLimitError",
    # Geometry
    "Coord",
    "Direction",
    "CANONICAL_ORDER",
    "ORTHOGONAL",
    "LandingStatus",
    "landing_status",
    # Board & jumps
    "Board",
    "JumpOutcome",
    "jump_outcome",
    "legal_jumps",
    "apply_jump",
    "apply_outcome",
    # Sequences
    "JumpSequence",
    "parse_sequence",
    "render_sequence",
    "VerifyStatus",
    "SequenceVerdict",
    "verify_sequence",
    # Text & SVG
    "parse_board",
    "render_board",
    "render_svg",
    # Solver
    "DEFAULT_NODE_LIMIT",
    "DEFAULT_ENUMERATION_CAP",
    "SearchOptions",
    "SearchResult",
    "EnumeratedSequence",
    "find_winning_sequence",
    "enumerate_sequences",
    "reference_search",
]

__version__ = "1.0.0"

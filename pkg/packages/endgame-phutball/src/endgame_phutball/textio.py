"""
Endgame Phutball — Board Text Format

    phutball <W> <H>
    <H lines of exactly W glyphs; the first line is row y = H-1>

Glyphs: ``.`` vacant, ``O`` man, ``@`` ball.
"""
from __future__ import annotations

from endgame_phutball.board import Board
from endgame_phutball.errors import BoardFormatError
from endgame_phutball.geometry import Coord

HEADER = "phutball"
VACANT = "."
MAN = "O"
BALL = "@"


def parse_board(text: str) -> Board:
    """
    Parse board text.

    Raises:
        BoardFormatError: bad header, dimension mismatch, unknown glyph,
            missing or repeated ball; row/column point at the problem
    """
    lines = [line.rstrip("\r") for line in text.split("\n")]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise BoardFormatError(1, None, "empty input")

    parts = lines[0].split()
    if len(parts) != 3 or parts[0] != HEADER:
        raise BoardFormatError(1, None, f"expected '{HEADER} <W> <H>', got {lines[0]!r}")
    try:
        width, height = int(parts[1]), int(parts[2])
    except ValueError:
        raise BoardFormatError(1, None, "dimensions must be integers") from None
    if width < 1 or height < 2:
        raise BoardFormatError(1, None, f"need W >= 1 and H >= 2, got {width}x{height}")

    rows = lines[1:]
    if len(rows) != height:
        # first missing row, or first surplus row
        row = len(lines) + 1 if len(rows) < height else height + 2
        raise BoardFormatError(row, None, f"expected {height} rows, found {len(rows)}")

    ball: Coord | None = None
    men: set[Coord] = set()
    for offset, row in enumerate(rows):
        text_row = offset + 2
        y = height - 1 - offset
        if len(row) != width:
            raise BoardFormatError(
                text_row, min(len(row), width) + 1, f"expected {width} glyphs, found {len(row)}"
            )
        for x, glyph in enumerate(row):
            if glyph == VACANT:
                continue
            if glyph == MAN:
                men.add(Coord(x, y))
            elif glyph == BALL:
                if ball is not None:
                    raise BoardFormatError(text_row, x + 1, "multiple balls")
                ball = Coord(x, y)
            else:
                raise BoardFormatError(text_row, x + 1, f"unknown glyph {glyph!r}")

    if ball is None:
        raise BoardFormatError(None, None, "no ball on the board")
    return Board(width=width, height=height, ball=ball, men=frozenset(men))


def render_board(board: Board) -> str:
    """Inverse of parse_board(); ends with a newline."""
    lines = [f"{HEADER} {board.width} {board.height}"]
    for y in range(board.height - 1, -1, -1):
        row = []
        for x in range(board.width):
            if (x, y) == board.ball:
                row.append(BALL)
            elif (x, y) in board.men:
                row.append(MAN)
            else:
                row.append(VACANT)
        lines.append("".join(row))
    return "\n".join(lines) + "\n"

"""
Endgame Checkers — Position Text Formats

Diamond view:

    checkers <W> <H> <mover>
    <H lines of exactly W glyphs; the first line is row y = H-1>

Standard board (converted to diamond view on parse):

    draughts <N> <mover>
    <N lines of N glyphs; the first line is rank N-1, a1 is bottom left>

Glyphs: ``.`` empty, ``#`` unplayable (diamond view only), ``b``/``B``
black man/king, ``w``/``W`` white man/king. mover is ``black`` or ``white``.
"""
from __future__ import annotations

from pydantic import ValidationError

from endgame_checkers.diamond import StandardPosition, is_dark, to_diamond
from endgame_checkers.errors import LightSquareError, PositionFormatError
from endgame_checkers.position import CheckersPosition, Color, Piece, Square

HEADER = "checkers"
STANDARD_HEADER = "draughts"
EMPTY = "."
UNPLAYABLE = "#"

GLYPHS: dict[str, tuple[Color, bool]] = {
    "b": (Color.BLACK, False),
    "B": (Color.BLACK, True),
    "w": (Color.WHITE, False),
    "W": (Color.WHITE, True),
}


def _glyph(piece: Piece) -> str:
    letter = "b" if piece.color is Color.BLACK else "w"
    return letter.upper() if piece.king else letter


def _lines(text: str) -> list[str]:
    lines = [line.rstrip("\r") for line in text.split("\n")]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise PositionFormatError(1, None, "empty input")
    return lines


def _mover(word: str) -> Color:
    try:
        return Color(word.lower())
    except ValueError:
        raise PositionFormatError(1, None, f"mover must be black or white, got {word!r}") from None


def _grid(lines: list[str], width: int, height: int, allowed: str):
    """Yield (text row, text column, x, y, glyph) for every non-empty cell."""
    rows = lines[1:]
    if len(rows) != height:
        row = len(lines) + 1 if len(rows) < height else height + 2
        raise PositionFormatError(row, None, f"expected {height} rows, found {len(rows)}")
    for offset, row in enumerate(rows):
        text_row = offset + 2
        if len(row) != width:
            raise PositionFormatError(
                text_row, min(len(row), width) + 1, f"expected {width} glyphs, found {len(row)}"
            )
        for x, glyph in enumerate(row):
            if glyph == EMPTY:
                continue
            if glyph not in allowed:
                raise PositionFormatError(text_row, x + 1, f"unknown glyph {glyph!r}")
            yield text_row, x + 1, x, height - 1 - offset, glyph


def parse_position(text: str) -> CheckersPosition:
    """
    Parse either text format into a diamond-view position.

    Raises:
        PositionFormatError: malformed text; row/column point at the problem
        LightSquareError: a standard-board piece on a light square
    """
    lines = _lines(text)
    if lines[0].split()[:1] == [STANDARD_HEADER]:
        return to_diamond(parse_standard(text))

    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != HEADER:
        raise PositionFormatError(1, None, f"expected '{HEADER} <W> <H> <mover>', got {lines[0]!r}")
    try:
        width, height = int(parts[1]), int(parts[2])
    except ValueError:
        raise PositionFormatError(1, None, "dimensions must be integers") from None
    if width < 1 or height < 1:
        raise PositionFormatError(1, None, f"need positive dimensions, got {width}x{height}")
    mover = _mover(parts[3])

    pieces = []
    unplayable = set()
    for _, _, x, y, glyph in _grid(lines, width, height, "".join(GLYPHS) + UNPLAYABLE):
        if glyph == UNPLAYABLE:
            unplayable.add(Square(x, y))
        else:
            color, king = GLYPHS[glyph]
            pieces.append(Piece(square=Square(x, y), color=color, king=king))

    return CheckersPosition(
        width=width, height=height, mover=mover, pieces=tuple(pieces), unplayable=frozenset(unplayable)
    )


def render_position(position: CheckersPosition) -> str:
    """Diamond-view text; inverse of parse_position() for this format."""
    lines = [f"{HEADER} {position.width} {position.height} {position.mover.value}"]
    for y in range(position.height - 1, -1, -1):
        row = []
        for x in range(position.width):
            piece = position.piece_at((x, y))
            if piece is not None:
                row.append(_glyph(piece))
            elif not position.is_playable((x, y)):
                row.append(UNPLAYABLE)
            else:
                row.append(EMPTY)
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def parse_standard(text: str) -> StandardPosition:
    """
    Parse the standard-board format.

    Raises:
        PositionFormatError: malformed text
        LightSquareError: a piece on a light square
    """
    lines = _lines(text)
    parts = lines[0].split()
    if len(parts) != 3 or parts[0] != STANDARD_HEADER:
        raise PositionFormatError(1, None, f"expected '{STANDARD_HEADER} <N> <mover>', got {lines[0]!r}")
    try:
        size = int(parts[1])
    except ValueError:
        raise PositionFormatError(1, None, "board size must be an integer") from None
    mover = _mover(parts[2])

    pieces = []
    for _, _, file, rank, glyph in _grid(lines, size, size, "".join(GLYPHS)):
        if not is_dark(file, rank):
            raise LightSquareError(file, rank)
        color, king = GLYPHS[glyph]
        pieces.append(Piece(square=Square(file, rank), color=color, king=king))
    try:
        return StandardPosition(size=size, mover=mover, pieces=tuple(pieces))
    except ValidationError as exc:
        raise PositionFormatError(1, None, exc.errors()[0]["msg"]) from None


def render_standard(position: StandardPosition) -> str:
    """Standard-board text; light squares are always '.'."""
    occupied = {p.square: p for p in position.pieces}
    lines = [f"{STANDARD_HEADER} {position.size} {position.mover.value}"]
    for rank in range(position.size - 1, -1, -1):
        lines.append(
            "".join(
                _glyph(occupied[(file, rank)]) if (file, rank) in occupied else EMPTY
                for file in range(position.size)
            )
        )
    return "\n".join(lines) + "\n"

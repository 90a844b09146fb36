"""
Endgame Checkers — Test Suite for the Diamond View and Text Formats
"""
from __future__ import annotations

import random

import pytest

from endgame_checkers import (
    CheckersPosition,
    Color,
    LightSquareError,
    Piece,
    PositionFormatError,
    Square,
    StandardPosition,
    describe_move,
    diamond_coords,
    from_diamond,
    has_one_move_win,
    parse_position,
    parse_standard,
    random_position,
    render_position,
    render_standard,
    standard_coords,
    to_diamond,
)


def _man(file: int, rank: int, color: Color = Color.BLACK, king: bool = False) -> Piece:
    return Piece(square=Square(file, rank), color=color, king=king)


class TestToDiamond:
    """Tests for to_diamond() / from_diamond()."""

    def test_empty_board_dimensions(self):
        position = to_diamond(StandardPosition(size=8))

        assert (position.width, position.height) == (8, 7)
        assert position.pieces == ()
        assert len(position.playable_squares()) == 32

    def test_dark_squares_are_a_bijection(self):
        cells = {diamond_coords(f, r, 8) for r in range(8) for f in range(8) if (f + r) % 2 == 0}

        assert len(cells) == 32
        assert all(diamond_coords(*standard_coords(c, 8), 8) == c for c in cells)

    def test_light_square_rejected(self):
        with pytest.raises(LightSquareError):
            diamond_coords(0, 1, 8)
        with pytest.raises(LightSquareError):
            to_diamond(StandardPosition(size=8, pieces=(_man(1, 0),)))

    def test_diagonal_jump_becomes_orthogonal(self):
        # black man on c3, white man on d4, e5 empty
        standard = StandardPosition(size=8, pieces=(_man(2, 2), _man(3, 3, Color.WHITE)))
        position = to_diamond(standard)
        verdict = has_one_move_win(position)

        assert position.piece_at((2, 3)).color is Color.BLACK
        assert position.piece_at((3, 3)).color is Color.WHITE
        assert verdict.landings == (Square(4, 3),)
        assert describe_move(verdict.piece, verdict.landings, 8) == "c3xe5"

    def test_king_rows(self):
        position = to_diamond(StandardPosition(size=8))

        # h8 and b8 are black king squares, a7 is not
        assert position.is_king_row(diamond_coords(7, 7, 8), Color.BLACK)
        assert position.is_king_row(diamond_coords(1, 7, 8), Color.BLACK)
        assert not position.is_king_row(diamond_coords(0, 6, 8), Color.BLACK)
        assert position.is_king_row(diamond_coords(0, 0, 8), Color.WHITE)

    def test_round_trip(self):
        rng = random.Random(11)
        for _ in range(20):
            position = random_position(rng, 8)
            standard = from_diamond(position)
            assert to_diamond(standard) == position
            assert {p.square for p in standard.pieces} == {
                standard_coords(p.square, 8) for p in position.pieces
            }

    def test_from_diamond_rejects_plain_grid(self):
        with pytest.raises(ValueError):
            from_diamond(CheckersPosition(width=8, height=7))


class TestPositionText:
    """Tests for parse_position() / render_position()."""

    def test_round_trip(self):
        rng = random.Random(5)
        for size in (4, 6, 8):
            position = random_position(rng, size)
            assert parse_position(render_position(position)) == position

    def test_unplayable_glyph(self):
        text = render_position(to_diamond(StandardPosition(size=4)))

        assert text.splitlines()[0] == "checkers 4 3 black"
        assert "#" in text

    def test_bad_header(self):
        with pytest.raises(PositionFormatError) as exc:
            parse_position("phutball 3 3\n...\n...\n...\n")

        assert exc.value.row == 1

    def test_unknown_glyph(self):
        with pytest.raises(PositionFormatError) as exc:
            parse_position("checkers 3 2 white\n...\n.x.\n")

        assert (exc.value.row, exc.value.column) == (3, 2)

    def test_bad_mover(self):
        with pytest.raises(PositionFormatError):
            parse_position("checkers 1 1 red\n.\n")

    def test_row_count(self):
        with pytest.raises(PositionFormatError) as exc:
            parse_position("checkers 2 3 black\n..\n..\n")

        assert exc.value.row == 4


class TestStandardText:
    """Tests for parse_standard() / render_standard()."""

    def test_parse(self):
        standard = parse_standard("draughts 4 white\n....\n....\n....\nb...\n")

        assert standard.mover is Color.WHITE
        assert standard.pieces == (_man(0, 0),)

    def test_parse_position_accepts_standard(self):
        position = parse_position("draughts 4 black\n....\n....\n....\nb...\n")

        assert (position.width, position.height) == (4, 3)
        assert position.piece_at((0, 1)).color is Color.BLACK

    def test_light_square(self):
        with pytest.raises(LightSquareError) as exc:
            parse_standard("draughts 4 black\n....\n....\n....\n.b..\n")

        assert (exc.value.file, exc.value.rank) == (1, 0)

    def test_odd_size(self):
        with pytest.raises(PositionFormatError):
            parse_standard("draughts 3 black\n...\n...\n...\n")

    def test_round_trip(self):
        standard = StandardPosition(
            size=6,
            mover=Color.WHITE,
            pieces=(_man(3, 5, Color.WHITE, king=True), _man(0, 0)),
        )

        assert parse_standard(render_standard(standard)) == standard

"""
Endgame Phutball — Test Suite for Jump Mechanics
"""
from __future__ import annotations

import pytest

from endgame_phutball import (
    Board,
    Coord,
    Direction,
    IllegalJumpError,
    LandingStatus,
    apply_jump,
    landing_status,
    legal_jumps,
)


def create_test_board(width: int, height: int, ball: tuple[int, int], *men: tuple[int, int]) -> Board:
    """Board from plain tuples."""
    return Board(
        width=width,
        height=height,
        ball=Coord(*ball),
        men=frozenset(Coord(*m) for m in men),
    )


class TestLegalJumps:
    """Tests for legal_jumps()."""

    def test_jump_over_two_men(self):
        """A single jump clears the whole contiguous run."""
        board = create_test_board(5, 5, (0, 2), (1, 2), (2, 2))
        jumps = legal_jumps(board)

        assert len(jumps) == 1
        direction, outcome = jumps[0]
        assert direction is Direction.E
        assert outcome.landing == Coord(3, 2)
        assert outcome.removed == {Coord(1, 2), Coord(2, 2)}
        assert outcome.winning is False

    def test_landing_over_goal_line_wins(self):
        board = create_test_board(3, 4, (1, 1), (1, 2), (1, 3))
        jumps = legal_jumps(board)

        assert [(d, o.landing, o.winning) for d, o in jumps] == [(Direction.N, Coord(1, 4), True)]

    def test_landing_on_goal_row_wins(self):
        board = create_test_board(3, 4, (1, 1), (1, 2))
        (_, outcome), = legal_jumps(board)

        assert outcome.landing == Coord(1, 3)
        assert outcome.winning is True

    def test_side_edge_excluded(self):
        board = create_test_board(3, 3, (1, 1), (0, 1))

        assert legal_jumps(board) == []

    def test_own_goal_row_landing_allowed(self):
        board = create_test_board(3, 4, (1, 2), (1, 1))
        (direction, outcome), = legal_jumps(board)

        assert direction is Direction.S
        assert outcome.landing == Coord(1, 0)

    def test_own_goal_overshoot_excluded(self):
        board = create_test_board(3, 4, (1, 1), (1, 0))

        assert legal_jumps(board) == []

    def test_canonical_direction_order(self):
        men = [(2, 3), (3, 3), (3, 2), (3, 1), (2, 1), (1, 1), (1, 2), (1, 3)]
        board = create_test_board(5, 6, (2, 2), *men)

        assert [d for d, _ in legal_jumps(board)] == list(Direction)

    def test_landing_cell_vacant_and_run_contiguous(self):
        board = create_test_board(6, 6, (0, 0), (1, 1), (2, 2), (4, 4))
        (_, outcome), = legal_jumps(board)

        assert outcome.landing == Coord(3, 3)
        assert outcome.landing not in board.men


class TestApplyJump:
    """Tests for apply_jump()."""

    def test_removes_run_and_moves_ball(self):
        board = create_test_board(5, 5, (0, 2), (1, 2), (2, 2), (4, 4))
        after = apply_jump(board, Direction.E)

        assert after.ball == Coord(3, 2)
        assert after.men == {Coord(4, 4)}

    def test_diagonal_jump(self):
        board = create_test_board(4, 5, (0, 0), (1, 1))
        after = apply_jump(board, Direction.NE)

        assert after.ball == Coord(2, 2)
        assert after.men == frozenset()

    def test_removed_men_never_reappear(self):
        board = create_test_board(6, 6, (0, 0), (1, 0), (3, 1), (3, 2))
        after = apply_jump(board, Direction.E)

        assert Coord(1, 0) not in after.men
        assert after.men < board.men

    def test_illegal_direction(self):
        board = create_test_board(5, 5, (0, 2), (1, 2))

        with pytest.raises(IllegalJumpError):
            apply_jump(board, Direction.N)

    def test_winning_jump_refused(self):
        board = create_test_board(3, 3, (1, 1), (1, 2))

        with pytest.raises(IllegalJumpError):
            apply_jump(board, Direction.N)


class TestLandingStatus:
    """The single landing predicate."""

    @pytest.mark.parametrize(
        "cell, expected",
        [
            ((0, 0), LandingStatus.OPEN),
            ((2, 3), LandingStatus.WIN),
            ((2, 4), LandingStatus.WIN),
            ((-1, 2), LandingStatus.ILLEGAL),
            ((3, 2), LandingStatus.ILLEGAL),
            ((1, -1), LandingStatus.ILLEGAL),
        ],
    )
    def test_classification(self, cell, expected):
        assert landing_status(3, 4, *cell) is expected


class TestBoardModel:
    """Board invariants."""

    def test_ball_on_man_rejected(self):
        with pytest.raises(ValueError):
            create_test_board(3, 3, (1, 1), (1, 1))

    def test_man_off_board_rejected(self):
        with pytest.raises(ValueError):
            create_test_board(3, 3, (1, 1), (5, 1))

    def test_scan_order(self):
        board = create_test_board(3, 3, (0, 0), (2, 0), (0, 2), (1, 2))

        assert board.scan_order() == [Coord(0, 2), Coord(1, 2), Coord(2, 0)]

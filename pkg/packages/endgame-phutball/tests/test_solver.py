"""
Endgame Phutball — Test Suite for the Jump Solver
"""
from __future__ import annotations

import pytest
from pydantic import ValidationError

from endgame_phutball import (
    Board,
    Coord,
    Direction,
    EnumerationLimitError,
    JumpSequence,
    SearchOptions,
    enumerate_sequences,
    find_winning_sequence,
    reference_search,
    verify_sequence,
)


def create_test_board(width: int, height: int, ball: tuple[int, int], *men: tuple[int, int]) -> Board:
    return Board(width=width, height=height, ball=Coord(*ball), men=frozenset(Coord(*m) for m in men))


class TestFindWinningSequence:
    """Tests for find_winning_sequence()."""

    def test_forced_single_jump(self):
        board = create_test_board(3, 3, (1, 1), (1, 2))
        result = find_winning_sequence(board)

        assert result.found == JumpSequence.of([(1, 3)])
        assert verify_sequence(board, result.found).is_winning

    def test_empty_board(self):
        board = create_test_board(3, 3, (1, 1))
        result = find_winning_sequence(board)

        assert result.found is None
        assert result.exhausted is True
        assert result.nodes_expanded == 1

    def test_multi_jump_win(self):
        board = create_test_board(5, 5, (0, 0), (1, 0), (2, 1), (2, 3))
        result = find_winning_sequence(board)

        assert result.found == JumpSequence.of([(2, 0), (2, 2), (2, 4)])

    def test_dead_end_exhausts(self):
        board = create_test_board(6, 6, (0, 0), (1, 0), (3, 0))
        result = find_winning_sequence(board)

        assert result.found is None
        assert result.exhausted is True

    def test_node_limit(self):
        men = [(x, y) for x in range(1, 7, 2) for y in range(1, 7, 2)]
        board = create_test_board(8, 10, (0, 0), *men)
        result = find_winning_sequence(board, SearchOptions(node_limit=1))

        assert result.found is None
        assert result.exhausted is False
        assert result.limit_hit

    def test_orthogonal_only_skips_diagonal_win(self):
        board = create_test_board(4, 3, (0, 0), (1, 1))

        assert find_winning_sequence(board).found is not None
        assert find_winning_sequence(board, SearchOptions(orthogonal_only=True)).found is None

    def test_deterministic(self):
        men = [(1, 1), (2, 2), (1, 3), (3, 1), (3, 3), (2, 5)]
        board = create_test_board(6, 8, (0, 0), *men)

        assert find_winning_sequence(board) == find_winning_sequence(board)

    def test_direction_order_validation(self):
        with pytest.raises(ValidationError):
            SearchOptions(direction_order=(Direction.N, Direction.N))
        with pytest.raises(ValidationError):
            SearchOptions(node_limit=0)


class TestEnumerateSequences:
    """Tests for enumerate_sequences()."""

    def test_single_man(self):
        board = create_test_board(3, 2, (0, 0), (1, 0))
        records = enumerate_sequences(board)

        assert [r.sequence for r in records] == [JumpSequence(), JumpSequence.of([(2, 0)])]
        assert records[1].removed == {Coord(1, 0)}
        assert records[1].ball == Coord(2, 0)

    def test_run_of_two(self):
        board = create_test_board(4, 3, (0, 0), (1, 0), (2, 0))
        records = enumerate_sequences(board)

        assert [r.sequence for r in records] == [JumpSequence(), JumpSequence.of([(3, 0)])]

    def test_prefix_closed(self):
        board = create_test_board(6, 8, (0, 0), (1, 0), (2, 1), (2, 3), (3, 2))
        sequences = {r.sequence for r in enumerate_sequences(board)}

        for sequence in sequences:
            for cut in range(len(sequence)):
                assert JumpSequence(landings=sequence.landings[:cut]) in sequences

    def test_winning_sequences_are_leaves(self):
        board = create_test_board(3, 3, (1, 0), (1, 1))
        records = enumerate_sequences(board)

        assert [r.winning for r in records] == [False, True]

    def test_max_len(self):
        board = create_test_board(5, 6, (0, 0), (1, 0), (2, 1), (2, 3))
        records = enumerate_sequences(board, max_len=1)

        assert max(len(r.sequence) for r in records) == 1

    def test_cap(self):
        men = [(x, y) for x in range(1, 8, 2) for y in range(1, 8, 2)]
        board = create_test_board(10, 12, (0, 0), *men)

        with pytest.raises(EnumerationLimitError):
            enumerate_sequences(board, cap=3)


class TestReferenceSearch:
    """The memo-free reference agrees on small hand-made boards."""

    def test_agrees_on_examples(self):
        boards = [
            create_test_board(3, 3, (1, 1), (1, 2)),
            create_test_board(6, 6, (0, 0), (1, 0), (3, 0)),
            create_test_board(5, 6, (0, 0), (1, 0), (2, 1), (2, 3)),
        ]
        for board in boards:
            assert reference_search(board) == (find_winning_sequence(board).found is not None)

"""
Endgame Phutball — Property Tests

Rule invariants over randomly generated small boards.
"""
from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given, settings

from endgame_phutball import (
    Board,
    Coord,
    JumpSequence,
    SearchOptions,
    VerifyStatus,
    enumerate_sequences,
    find_winning_sequence,
    legal_jumps,
    parse_board,
    reference_search,
    render_board,
    verify_sequence,
)


@st.composite
def boards(draw, max_side: int = 8, max_men: int = 10):
    width = draw(st.integers(min_value=2, max_value=max_side))
    height = draw(st.integers(min_value=2, max_value=max_side))
    cells = [(x, y) for x in range(width) for y in range(height)]
    chosen = draw(
        st.lists(
            st.sampled_from(cells),
            min_size=1,
            max_size=min(max_men + 1, len(cells)),
            unique=True,
        )
    )
    return Board(
        width=width,
        height=height,
        ball=Coord(*chosen[0]),
        men=frozenset(Coord(*c) for c in chosen[1:]),
    )


class TestJumpInvariants:
    """Every legal jump removes a nonempty contiguous run and lands on a vacancy."""

    @given(boards())
    @settings(max_examples=150, deadline=None)
    def test_run_contiguous_and_landing_vacant(self, board):
        for direction, outcome in legal_jumps(board):
            assert outcome.removed
            run = [board.ball.step(direction, k) for k in range(1, len(outcome.removed) + 1)]
            assert set(run) == outcome.removed
            assert outcome.landing == board.ball.step(direction, len(run) + 1)
            assert outcome.landing not in board.men

    @given(boards())
    @settings(max_examples=150, deadline=None)
    def test_mirror_symmetry(self, board):
        mirrored = board.mirrored()
        flip = board.width - 1
        expected = {
            (d.mirrored(), Coord(flip - o.landing.x, o.landing.y), o.winning)
            for d, o in legal_jumps(board)
        }
        actual = {(d, o.landing, o.winning) for d, o in legal_jumps(mirrored)}

        assert actual == expected


class TestTextRoundTrip:
    @given(boards(max_side=12, max_men=30))
    @settings(max_examples=100, deadline=None)
    def test_parse_render(self, board):
        assert parse_board(render_board(board)) == board


class TestVerifierAgainstEnumeration:
    """verify_sequence accepts exactly what iterated legal jumps can produce."""

    @given(boards(max_men=8))
    @settings(max_examples=80, deadline=None)
    def test_enumerated_sequences_verify(self, board):
        for record in enumerate_sequences(board):
            verdict = verify_sequence(board, record.sequence)
            expected = VerifyStatus.VALID_WINNING if record.winning else VerifyStatus.VALID_NONWINNING
            assert verdict.status is expected
            assert len(record.sequence) <= board.man_count
            assert verdict.removed == record.removed

    @given(boards(max_side=6, max_men=8), st.data())
    @settings(max_examples=80, deadline=None)
    def test_random_sequences_rejected_unless_enumerated(self, board, data):
        known = {r.sequence for r in enumerate_sequences(board)}
        coord = st.builds(
            Coord,
            st.integers(min_value=-1, max_value=board.width),
            st.integers(min_value=-1, max_value=board.height),
        )
        landings = data.draw(st.lists(coord, min_size=1, max_size=3))
        sequence = JumpSequence(landings=tuple(landings))

        valid = verify_sequence(board, sequence).status is not VerifyStatus.INVALID
        assert valid == (sequence in known)


class TestSolverProperties:
    """Soundness, small-scale completeness, monotonicity and determinism."""

    @given(boards(max_men=12))
    @settings(max_examples=120, deadline=None)
    def test_agrees_with_reference(self, board):
        result = find_winning_sequence(board)

        assert result.found is not None or result.exhausted
        assert (result.found is not None) == reference_search(board)
        if result.found is not None:
            assert verify_sequence(board, result.found).is_winning

    @given(boards(max_men=12))
    @settings(max_examples=120, deadline=None)
    def test_orthogonal_restriction_is_monotone(self, board):
        orthogonal = find_winning_sequence(board, SearchOptions(orthogonal_only=True))
        unrestricted = find_winning_sequence(board)

        if orthogonal.found is not None:
            assert unrestricted.found is not None
        assert (orthogonal.found is not None) == reference_search(board, orthogonal_only=True)

    @given(boards(max_men=12))
    @settings(max_examples=60, deadline=None)
    def test_deterministic(self, board):
        assert find_winning_sequence(board) == find_winning_sequence(board)

    @given(boards(max_men=12))
    @settings(max_examples=60, deadline=None)
    def test_every_jump_removes_men(self, board):
        result = find_winning_sequence(board)
        if result.found is not None:
            assert len(result.found) <= board.man_count

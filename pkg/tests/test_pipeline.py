"""
End-to-end checks across packages: DIMACS -> board -> solver -> assignment,
and the seeded acceptance suites (marked slow).

Usage:
    pytest tests/test_pipeline.py            # quick subset
    pytest tests/test_pipeline.py -m slow    # full suites
"""
from __future__ import annotations

import pytest

from endgame_checkers import (
    analyze,
    build_jump_graph,
    can_king,
    has_one_move_win,
    oracle_can_king,
    oracle_one_move_win,
    suite_positions,
)
from endgame_cli import RunConfig, render_round_trip, run_checkers_suite, run_round_trip
from endgame_phutball import SearchOptions, find_winning_sequence, verify_sequence
from endgame_reduction import (
    compile_formula,
    compile_report,
    instance_from_manifest,
    sequence_to_assignment,
    write_manifest,
)
from endgame_sat import brute_force_sat, evaluate, parse_dimacs, random_suite

THREE_VARIABLE_DIMACS = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"


class TestThreeVariableInstance:
    """(a | b | c) & (~a | ~b | ~c) end to end."""

    def test_solver_witness_satisfies_formula(self):
        formula = parse_dimacs(THREE_VARIABLE_DIMACS)
        instance = compile_formula(formula)
        result = find_winning_sequence(instance.board)

        assert result.found is not None
        assert verify_sequence(instance.board, result.found).is_winning
        assert evaluate(formula, sequence_to_assignment(instance, result.found))

    def test_manifest_carries_the_formula(self):
        formula = parse_dimacs(THREE_VARIABLE_DIMACS)
        instance = compile_formula(formula)
        reattached = instance_from_manifest(instance.board, write_manifest(instance.plan))

        assert reattached.formula == instance.formula
        assert sequence_to_assignment(reattached, find_winning_sequence(instance.board).found)


def _round_trip_suite(seed: int, count: int, vars_range, clauses_range, node_limit: int = 2_000_000):
    options = SearchOptions(node_limit=node_limit)
    orthogonal_options = SearchOptions(node_limit=node_limit, orthogonal_only=True)
    for formula in random_suite(seed, count, vars_range, clauses_range):
        instance = compile_formula(formula)
        report = compile_report(instance)
        oracle = brute_force_sat(formula)
        diagonal = find_winning_sequence(instance.board, options)
        orthogonal = find_winning_sequence(instance.board, orthogonal_options)

        assert report.within_bounds
        assert diagonal.exhausted or diagonal.found is not None
        assert (oracle is not None) == (diagonal.found is not None)
        assert (diagonal.found is None) == (orthogonal.found is None)
        if diagonal.found is not None:
            assert evaluate(formula, sequence_to_assignment(instance, diagonal.found))


class TestRoundTrip:
    """SAT <-> winning jump sequence on seeded random formulas."""

    def test_small_suite(self):
        _round_trip_suite(seed=1, count=12, vars_range=(1, 4), clauses_range=(1, 4))

    @pytest.mark.slow
    def test_full_suite(self):
        # unsatisfiable instances are searched exhaustively; every true literal
        # of every clause opens a separate route
        _round_trip_suite(
            seed=1, count=200, vars_range=(1, 8), clauses_range=(1, 10), node_limit=100_000_000
        )

    def test_report_is_reproducible(self):
        config = RunConfig(seed=5, count=3, vars="1..3", clauses="1..3")

        assert render_round_trip(run_round_trip(config)) == render_round_trip(run_round_trip(config))


def _checkers_suite(seed: int, count: int):
    wins = kingable = 0
    for position in suite_positions(seed, count):
        for piece in position.pieces_of(position.mover):
            graph = build_jump_graph(position, piece.square)
            parity = (piece.square.x % 2, piece.square.y % 2)
            assert all(graph.degree(p) == 2 for p in graph.pieces)
            assert all((c.x % 2, c.y % 2) == parity for c in graph.cells)
            if not piece.king:
                reachable = can_king(position, piece.square).reachable
                assert reachable == oracle_can_king(position, piece.square)
                kingable += reachable
        winning = has_one_move_win(position).winning
        assert winning == oracle_one_move_win(position)
        wins += winning
        verdict = analyze(position)
        assert verdict.one_move_win == has_one_move_win(position)

    assert wins >= count // 6
    assert kingable >= count // 4


class TestCheckersSuite:
    """Jump-graph analysis against brute force on seeded suites of positions."""

    def test_small_suite(self):
        _checkers_suite(seed=7, count=60)

    @pytest.mark.slow
    def test_full_suite(self):
        _checkers_suite(seed=1, count=500)

    def test_harness_agrees(self):
        report = run_checkers_suite(RunConfig(seed=3, count=40))

        assert report.agreed == len(report.rows) == 40

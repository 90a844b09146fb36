"""
Endgame Reduction — Test Suite for Layout and Compilation
"""
from __future__ import annotations

import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from endgame_phutball import Coord, SearchOptions, find_winning_sequence, verify_sequence
from endgame_reduction import (
    COLUMN_CONSTANT,
    ROW_CONSTANT,
    GadgetKind,
    build_board,
    compile_formula,
    compile_report,
    dimensions,
    plan_layout,
)
from endgame_sat import CnfFormula, brute_force_sat, parse_dimacs, random_formula

THREE_VARIABLE_DIMACS = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"


@st.composite
def formulas(draw, max_vars: int = 6, max_clauses: int = 6):
    num_vars = draw(st.integers(min_value=1, max_value=max_vars))
    num_clauses = draw(st.integers(min_value=0, max_value=max_clauses))
    seed = draw(st.integers(min_value=0, max_value=2**31))
    return random_formula(random.Random(seed), num_vars, num_clauses)


class TestPlanLayout:
    """Tests for plan_layout()."""

    def test_three_variable_dimensions(self):
        plan = plan_layout(parse_dimacs(THREE_VARIABLE_DIMACS))

        assert plan.height == 6 * 3 + ROW_CONSTANT
        assert plan.width == 9 * 2 + COLUMN_CONSTANT
        assert plan.return_row == 1
        assert plan.ball == Coord(1, plan.variables[0].upper)

    def test_empty_formula(self):
        plan = plan_layout(CnfFormula(num_vars=0))

        assert (plan.width, plan.height) == (COLUMN_CONSTANT, 8)
        assert plan.crossings == ()
        assert not plan.goal_on_top

    def test_interactions_follow_literal_sign(self):
        plan = plan_layout(parse_dimacs(THREE_VARIABLE_DIMACS))
        interactions = {
            (c.variable, c.clause, c.at.y) for c in plan.crossings if c.kind is GadgetKind.INTERACTION
        }
        lines = plan.variables

        # positive literals are cut by the false row, negated ones by the true row
        assert (0, 0, lines[0].lower) in interactions
        assert (0, 1, lines[0].upper) in interactions
        assert len(interactions) == 6

    def test_equal_neighbours_widen(self):
        formula = parse_dimacs("p cnf 1 1\n1 0\n")
        plan = plan_layout(formula)

        assert plan.widened_pairs == 2
        assert plan.clauses[0].gaps == (4, 4)
        assert plan.width == 9 + COLUMN_CONSTANT + 2

    def test_width_bound_grows_with_widening(self):
        plan = plan_layout(parse_dimacs("p cnf 1 3\n1 0\n1 0\n1 0\n"))
        width, _ = dimensions(plan)

        assert plan.widened_pairs == 3 * 3 - 1
        assert width == 9 * 3 + COLUMN_CONSTANT + 8
        assert width - 9 * 3 > COLUMN_CONSTANT

    def test_dimensions(self):
        assert dimensions(plan_layout(parse_dimacs(THREE_VARIABLE_DIMACS))) == (18 + COLUMN_CONSTANT, 18 + ROW_CONSTANT)
        assert dimensions(plan_layout(CnfFormula(num_vars=0))) == (COLUMN_CONSTANT, 8)

        plan = plan_layout(random_formula(random.Random(0), 8, 10))
        width, height = dimensions(plan)
        assert height <= 48 + ROW_CONSTANT
        assert width == 90 + COLUMN_CONSTANT + plan.widened_pairs

    @given(formulas())
    @settings(max_examples=60, deadline=None)
    def test_dimension_bound(self, formula):
        plan = plan_layout(formula)
        n, m = formula.num_vars, formula.num_clauses

        assert plan.height <= 6 * n + ROW_CONSTANT
        assert plan.width == 9 * m + COLUMN_CONSTANT + plan.widened_pairs

    @given(formulas())
    @settings(max_examples=60, deadline=None)
    def test_interaction_spacing(self, formula):
        plan = plan_layout(formula)
        rows: dict[int, list[int]] = {}
        for entry in plan.crossings:
            if entry.kind is GadgetKind.INTERACTION:
                rows.setdefault(entry.at.y, []).append(entry.at.x)
        for xs in rows.values():
            xs.sort()
            assert all(b - a >= 4 for a, b in zip(xs, xs[1:]))


class TestCompileFormula:
    """Tests for compile_formula()."""

    def test_three_variable_instance_is_winnable(self):
        instance = compile_formula(parse_dimacs(THREE_VARIABLE_DIMACS))
        result = find_winning_sequence(instance.board)

        assert result.found is not None
        assert verify_sequence(instance.board, result.found).is_winning

    def test_contradiction_has_no_win(self):
        instance = compile_formula(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"))
        result = find_winning_sequence(instance.board)

        assert result.found is None
        assert result.exhausted

    def test_empty_formula_board(self):
        instance = compile_formula(CnfFormula(num_vars=0))
        board = instance.board

        assert board.ball == Coord(1, 1)
        assert board.men == {Coord(2, 1), Coord(3, 1)} | {Coord(4, y) for y in range(2, 7)}
        assert find_winning_sequence(board).found is not None

    def test_deterministic(self):
        formula = parse_dimacs(THREE_VARIABLE_DIMACS)

        assert compile_formula(formula) == compile_formula(formula)

    def test_report_within_bounds(self):
        report = compile_report(compile_formula(parse_dimacs(THREE_VARIABLE_DIMACS)))

        assert report.within_bounds
        assert report.interactions == 6
        # 6 clause columns and the goal column cross 6 variable rows
        assert report.crossings == 6 * 6 - 6 + 6

    def test_board_matches_plan(self):
        instance = compile_formula(parse_dimacs(THREE_VARIABLE_DIMACS))

        assert build_board(instance.plan) == instance.board
        assert (instance.board.width, instance.board.height) == (instance.plan.width, instance.plan.height)

    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_oracle(self, seed):
        rng = random.Random(seed)
        formula = random_formula(rng, rng.randint(1, 3), rng.randint(1, 4))
        instance = compile_formula(formula)
        result = find_winning_sequence(instance.board)

        assert result.exhausted or result.found is not None
        assert (result.found is not None) == (brute_force_sat(formula) is not None)

    def test_orthogonal_search_agrees(self):
        instance = compile_formula(parse_dimacs(THREE_VARIABLE_DIMACS))
        orthogonal = find_winning_sequence(instance.board, SearchOptions(orthogonal_only=True))

        assert orthogonal.found is not None

"""
Endgame SAT — Test Suite for Clause Literal Ordering
"""
from __future__ import annotations

import itertools
import random

import hypothesis.strategies as st
from hypothesis import given, settings

from endgame_sat import (
    Assignment,
    Clause,
    CnfFormula,
    Literal,
    boundary_flags,
    evaluate,
    order_clause_variables,
    plan_clause_order,
    random_formula,
)


def clause(*variables: int) -> Clause:
    return Clause.of(Literal(variable=v) for v in variables)


class TestOrderClauseVariables:
    """Tests for order_clause_variables()."""

    def test_boundary_conflict_resolved(self):
        """(a,b,c),(c,d,e): the second clause must not start with c."""
        formula = CnfFormula(num_vars=5, clauses=(clause(0, 1, 2), clause(2, 3, 4)))
        ordered = order_clause_variables(formula)

        assert ordered.clauses[0] == formula.clauses[0]
        assert ordered.clauses[1].literals[0].variable in (3, 4)

    def test_single_clause_unchanged(self):
        formula = CnfFormula(num_vars=3, clauses=(clause(0, 1, 2),))

        assert order_clause_variables(formula) == formula

    def test_repeated_variable_clause(self):
        """(a,a,a),(a,b,c): only the second clause can move, and it does."""
        formula = CnfFormula(num_vars=3, clauses=(clause(0), clause(0, 1, 2)))
        result = plan_clause_order(formula)

        assert result.formula.clauses[1].literals[0].variable != 0
        assert result.achieved == (True,)

    def test_unachievable_pair_is_flagged(self):
        formula = CnfFormula(num_vars=1, clauses=(clause(0), clause(0)))
        result = plan_clause_order(formula)

        assert result.achieved == (False,)
        assert result.unachievable_pairs == [1]

    def test_idempotent(self):
        rng = random.Random(5)
        formula = random_formula(rng, 6, 9)
        once = order_clause_variables(formula)

        assert order_clause_variables(once) == once

    def test_padded_clause_avoids_equal_neighbours(self):
        """(a,b,a) style padding stays free of equal neighbours."""
        formula = CnfFormula(num_vars=2, clauses=(clause(0, 1),))
        result = plan_clause_order(formula)

        assert result.equal_neighbours == 0

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_satisfaction_invariant(self, seed):
        """Permuting literals never changes which assignments satisfy the formula."""
        rng = random.Random(seed)
        n = rng.randint(1, 5)
        formula = random_formula(rng, n, rng.randint(0, 8))
        ordered = order_clause_variables(formula)

        for values in itertools.product((False, True), repeat=n):
            a = Assignment(values=values)
            assert evaluate(formula, a) == evaluate(ordered, a)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=40, deadline=None)
    def test_distinct_variable_clauses_always_achieve(self, seed):
        """With three distinct variables per clause every boundary can be fixed."""
        rng = random.Random(seed)
        formula = random_formula(rng, rng.randint(3, 8), rng.randint(1, 10))

        assert all(boundary_flags(order_clause_variables(formula).clauses))

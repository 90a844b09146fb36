"""
Endgame SAT — Test Suite for DIMACS Parsing

Tests that the reader normalizes clauses, reports errors with line
numbers, and that the writer round-trips.
"""
from __future__ import annotations

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from endgame_sat import (
    Clause,
    ClauseWidthError,
    DimacsSyntaxError,
    EmptyClauseError,
    Literal,
    parse_dimacs,
    write_dimacs,
)


def lit(value: int) -> Literal:
    return Literal.from_dimacs(value)


THREE_VARIABLE_DIMACS = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"


@st.composite
def dimacs_documents(draw):
    num_vars = draw(st.integers(min_value=1, max_value=6))
    literal = st.integers(min_value=1, max_value=num_vars).flatmap(
        lambda v: st.sampled_from([v, -v])
    )
    clauses = draw(st.lists(st.lists(literal, min_size=1, max_size=3), max_size=8))
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines += [" ".join(str(x) for x in clause) + " 0" for clause in clauses]
    return "\n".join(lines) + "\n"


class TestParseDimacs:
    """Tests for parse_dimacs()."""

    def test_single_unit_clause(self):
        """A positive unit clause is padded to three equal slots."""
        formula = parse_dimacs("p cnf 1 1\n1 0")

        assert formula.num_vars == 1
        assert formula.num_clauses == 1
        assert formula.clauses[0].literals == (lit(1), lit(1), lit(1))

    def test_three_clause_instance_preserves_order(self):
        """Literal order is kept exactly as written."""
        formula = parse_dimacs(THREE_VARIABLE_DIMACS)

        assert formula.clauses[0].literals == (lit(1), lit(2), lit(3))
        assert formula.clauses[1].literals == (lit(-1), lit(-2), lit(-3))

    def test_duplicate_literal_normalization(self):
        """Duplicates collapse, then distinct literals repeat cyclically."""
        formula = parse_dimacs("p cnf 2 1\n1 1 -2 0")

        assert formula.clauses[0].literals == (lit(1), lit(-2), lit(1))

    def test_comments_and_multiline_clauses(self):
        text = "c header comment\np cnf 3 1\n1\n-2\n3 0\n"
        formula = parse_dimacs(text)

        assert formula.clauses[0].literals == (lit(1), lit(-2), lit(3))

    def test_tautology_is_kept(self):
        formula = parse_dimacs("p cnf 2 1\n1 -1 2 0")

        assert formula.clauses[0].is_tautology()

    def test_empty_formula(self):
        formula = parse_dimacs("p cnf 0 0\n")

        assert formula.num_vars == 0
        assert formula.clauses == ()

    def test_satlib_trailer(self):
        """A '%' line and the lone 0 after it end the clause section."""
        formula = parse_dimacs("c uf3\np cnf 3 2\n 1 -2 3 0\n-1 2 0\n%\n0\n\n")

        assert formula.num_clauses == 2
        assert formula.clauses[1].literals == (lit(-1), lit(2), lit(-1))

    def test_satlib_trailer_still_counts_clauses(self):
        with pytest.raises(DimacsSyntaxError):
            parse_dimacs("p cnf 3 2\n1 2 3 0\n%\n0\n")


class TestParseErrors:
    """Errors carry the offending line."""

    def test_four_literal_clause_rejected(self):
        with pytest.raises(ClauseWidthError) as exc:
            parse_dimacs("p cnf 4 1\n1 2 3 4 0\n")

        assert exc.value.line == 2
        assert exc.value.width == 4

    def test_literal_beyond_declared_vars(self):
        with pytest.raises(DimacsSyntaxError) as exc:
            parse_dimacs("p cnf 2 1\n1 3 0\n")

        assert exc.value.line == 2

    def test_non_integer_token(self):
        with pytest.raises(DimacsSyntaxError) as exc:
            parse_dimacs("p cnf 2 1\n1 x 0\n")

        assert "line 2" in str(exc.value)

    def test_missing_problem_line(self):
        with pytest.raises(DimacsSyntaxError):
            parse_dimacs("1 2 0\n")

    def test_clause_count_mismatch(self):
        with pytest.raises(DimacsSyntaxError):
            parse_dimacs("p cnf 2 2\n1 2 0\n")

    def test_unterminated_clause(self):
        with pytest.raises(DimacsSyntaxError):
            parse_dimacs("p cnf 2 1\n1 2\n")

    def test_empty_clause(self):
        with pytest.raises(EmptyClauseError):
            parse_dimacs("p cnf 2 1\n0\n")


class TestWriteDimacs:
    """Tests for write_dimacs()."""

    def test_writes_distinct_literals(self):
        formula = parse_dimacs("p cnf 2 1\n1 1 -2 0")

        assert write_dimacs(formula) == "p cnf 2 1\n1 -2 0\n"

    def test_comment_lines(self):
        text = write_dimacs(parse_dimacs(THREE_VARIABLE_DIMACS), comment="generated")

        assert text.startswith("c generated\np cnf 3 2\n")

    @given(dimacs_documents())
    @settings(max_examples=60, deadline=None)
    def test_parse_write_parse_fixed_point(self, text):
        """Parsing, writing, then parsing again is a fixed point."""
        once = parse_dimacs(text)
        twice = parse_dimacs(write_dimacs(once))

        assert twice == once


class TestClauseOf:
    """Normalization helpers on Clause."""

    def test_two_literals_pad_cyclically(self):
        clause = Clause.of([lit(1), lit(-2)])

        assert clause.literals == (lit(1), lit(-2), lit(1))

    def test_literal_round_trip(self):
        for value in (1, -1, 7, -7):
            assert lit(value).to_dimacs() == value

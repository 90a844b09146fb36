"""
Endgame Reduction — Test Suite for Witness Translation and Manifests
"""
from __future__ import annotations

import itertools

import pytest

from endgame_phutball import Coord, Direction, JumpSequence, VerifyStatus, verify_sequence
from endgame_reduction import (
    ManifestFormatError,
    PathChoice,
    UnsatisfiedClauseError,
    WitnessError,
    assignment_to_sequence,
    compile_formula,
    instance_from_manifest,
    parse_manifest,
    path_choice_from_sequence,
    route_legs,
    sequence_to_assignment,
    simplify_sequence,
    trace_route,
    write_manifest,
)
from endgame_sat import Assignment, CnfFormula, evaluate, parse_dimacs

THREE_VARIABLE_DIMACS = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"


@pytest.fixture(scope="module")
def three_variable():
    return compile_formula(parse_dimacs(THREE_VARIABLE_DIMACS))


def _passes_over(path, cell) -> bool:
    return any(
        a.x == b.x == cell.x and min(a.y, b.y) < cell.y < max(a.y, b.y)
        for a, b in zip(path, path[1:])
    )


class TestAssignmentToSequence:
    """Tests for assignment_to_sequence()."""

    def test_satisfying_assignment(self, three_variable):
        assignment = Assignment(values=(True, False, False))
        sequence = assignment_to_sequence(three_variable, assignment)
        choice = path_choice_from_sequence(three_variable, sequence)

        assert verify_sequence(three_variable.board, sequence).status is VerifyStatus.VALID_WINNING
        assert choice == PathChoice(values=(True, False, False), lines=(0, 1))

    def test_every_satisfying_assignment(self, three_variable):
        for values in itertools.product((False, True), repeat=3):
            assignment = Assignment(values=values)
            if not evaluate(three_variable.formula, assignment):
                with pytest.raises(UnsatisfiedClauseError):
                    assignment_to_sequence(three_variable, assignment)
                continue
            sequence = assignment_to_sequence(three_variable, assignment)
            assert sequence_to_assignment(three_variable, sequence) == assignment

    def test_unsatisfying_assignment_names_clause(self, three_variable):
        with pytest.raises(UnsatisfiedClauseError) as exc:
            assignment_to_sequence(three_variable, Assignment(values=(True, True, True)))

        assert exc.value.clause_index == 1

    def test_empty_formula(self):
        instance = compile_formula(CnfFormula(num_vars=0))
        sequence = assignment_to_sequence(instance, Assignment(values=()))

        assert sequence == JumpSequence.of([(4, 1), (4, 7)])

    def test_wrong_length(self, three_variable):
        with pytest.raises(WitnessError):
            assignment_to_sequence(three_variable, Assignment(values=(True,)))


class TestSequenceToAssignment:
    """Tests for sequence_to_assignment() and simplify_sequence()."""

    def test_used_lines_are_the_ones_a_jump_passes_through(self, three_variable):
        plan = three_variable.plan
        for values in itertools.product((False, True), repeat=3):
            assignment = Assignment(values=values)
            if not evaluate(three_variable.formula, assignment):
                continue
            sequence = assignment_to_sequence(three_variable, assignment)
            removed = verify_sequence(three_variable.board, sequence).removed
            path = [three_variable.board.ball, *sequence.landings]
            for clause, term in itertools.product(range(2), range(3)):
                marker = plan.line_marker(clause, term)
                assert _passes_over(path, marker) == (marker in removed)

    def test_rejects_non_winning(self, three_variable):
        with pytest.raises(WitnessError):
            sequence_to_assignment(three_variable, JumpSequence())

    def test_simplify_is_identity_on_canonical_routes(self, three_variable):
        sequence = assignment_to_sequence(three_variable, Assignment(values=(False, True, False)))

        assert simplify_sequence(three_variable, sequence) == sequence

    def test_all_three_lines(self):
        instance = compile_formula(parse_dimacs("p cnf 3 1\n1 2 3 0\n"))
        plan = instance.plan
        clause = plan.clauses[0]
        x0, x1, x2 = clause.columns
        y_bottom, y_top = plan.bottom_row, plan.top_row

        legs = route_legs(plan, PathChoice(values=(True, True, True), lines=(0,)))
        # the clause part of the canonical route is its last four legs
        legs = legs[:-4] + [
            (Direction.N, Coord(x0, y_top)),
            (Direction.E, Coord(x1, y_top)),
            (Direction.S, Coord(x1, y_bottom)),
            (Direction.E, Coord(x2, y_bottom)),
            (Direction.N, Coord(x2, y_top)),
            (Direction.E, Coord(plan.goal_column, y_top)),
            (Direction.N, None),
        ]
        sequence = trace_route(instance.board, legs)
        removed = verify_sequence(instance.board, sequence).removed
        simplified = simplify_sequence(instance, sequence)
        simplified_removed = verify_sequence(instance.board, simplified).removed

        assert all(plan.line_marker(0, j) in removed for j in range(3))
        assert sequence_to_assignment(instance, sequence) == Assignment(values=(True, True, True))
        assert simplified != sequence
        assert verify_sequence(instance.board, simplified).is_winning
        assert [plan.line_marker(0, j) in simplified_removed for j in range(3)] == [True, False, False]

    def test_blocked_route(self, three_variable):
        legs = route_legs(three_variable.plan, PathChoice(values=(True, True, True), lines=(0, 0)))

        with pytest.raises(WitnessError):
            trace_route(three_variable.board, legs)


class TestManifest:
    """Tests for write_manifest() / parse_manifest()."""

    def test_round_trip(self, three_variable):
        text = write_manifest(three_variable.plan)

        assert text.startswith("endgame-layout 1\n")
        assert parse_manifest(text) == three_variable.plan

    def test_reattach_to_board(self, three_variable):
        text = write_manifest(three_variable.plan)
        instance = instance_from_manifest(three_variable.board, text)

        assert instance == three_variable

    def test_comments_ignored(self, three_variable):
        text = "# layout\n\n" + write_manifest(three_variable.plan)

        assert parse_manifest(text) == three_variable.plan

    def test_tampered_record(self, three_variable):
        lines = write_manifest(three_variable.plan).splitlines()
        index = next(i for i, line in enumerate(lines) if line.startswith("dims"))
        lines[index] = "dims 99 99"

        with pytest.raises(ManifestFormatError) as exc:
            parse_manifest("\n".join(lines))

        assert exc.value.line == index + 1

    def test_bad_header(self):
        with pytest.raises(ManifestFormatError):
            parse_manifest("layout 7\n")

    def test_board_mismatch(self, three_variable):
        other = compile_formula(CnfFormula(num_vars=0))

        with pytest.raises(ManifestFormatError):
            instance_from_manifest(other.board, write_manifest(three_variable.plan))

"""
Endgame Reduction — Witness Translation

Moves certificates between the two sides of the reduction:

    assignment_to_sequence()   satisfying assignment -> winning jump sequence
    sequence_to_assignment()   winning jump sequence -> satisfying assignment
    simplify_sequence()        any winning sequence -> one using a single
                               line per clause

A route is a list of legs (direction, target). Each leg repeats jumps in
one direction until the ball lands on the target; a target of None means
"until the jump wins".

Which lines a sequence used is read off the men it removed: every row
and clause line has a marker man that only a traversal of that line can
take (see LayoutPlan.row_marker and LayoutPlan.line_marker).
"""
from __future__ import annotations

import logging
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict

from endgame_phutball import Board, Coord, Direction, JumpSequence, apply_outcome, jump_outcome, verify_sequence
from endgame_sat import Assignment, evaluate

from endgame_reduction.compiler import CompiledInstance
from endgame_reduction.errors import ManifestInconsistencyError, UnsatisfiedClauseError, WitnessError
from endgame_reduction.layout import LayoutPlan

logger = logging.getLogger(__name__)

Leg = tuple[Direction, Optional[Coord]]


class PathChoice(BaseModel):
    """Row chosen per variable (True = upper row) and line chosen per clause."""

    model_config = ConfigDict(frozen=True)

    values: tuple[bool, ...]
    lines: tuple[int, ...]


# =============================================================================
# Routes
# =============================================================================

def route_legs(plan: LayoutPlan, choice: PathChoice) -> list[Leg]:
    """The legs of the canonical route for a path choice."""
    if len(choice.values) != plan.num_vars or len(choice.lines) != plan.num_clauses:
        raise WitnessError(
            f"path choice covers {len(choice.values)} variables and {len(choice.lines)} clauses; "
            f"layout has {plan.num_vars} and {plan.num_clauses}"
        )
    legs: list[Leg] = []
    for lines, value in zip(plan.variables, choice.values):
        along = Direction.E if lines.rightward else Direction.W
        if value:
            legs.append((along, Coord(lines.exit_column, lines.upper)))
            legs.append((Direction.S, Coord(lines.exit_column, lines.lower)))
        else:
            legs.append((Direction.S, Coord(lines.entry_column, lines.lower)))
            legs.append((along, Coord(lines.exit_column, lines.lower)))
        legs.append((Direction.S, Coord(lines.exit_column, lines.lower - 3)))

    if plan.return_row is not None:
        legs.append((Direction.S, Coord(plan.right_column, plan.return_row)))
        legs.append((Direction.W, Coord(plan.left_column, plan.return_row)))
        legs.append((Direction.N, Coord(plan.left_column, plan.bottom_row)))

    if not plan.clauses:
        legs.append((Direction.E, Coord(plan.goal_column, plan.bottom_row)))
    else:
        legs.append((Direction.E, Coord(plan.clauses[0].columns[0], plan.bottom_row)))

    for clause, term in zip(plan.clauses, choice.lines):
        start_row, end_row = (
            (plan.bottom_row, plan.top_row) if clause.upward else (plan.top_row, plan.bottom_row)
        )
        vertical = Direction.N if clause.upward else Direction.S
        x = clause.columns[term]
        if term > 0:
            legs.append((Direction.E, Coord(x, start_row)))
        legs.append((vertical, Coord(x, end_row)))
        if term < 2:
            legs.append((Direction.E, Coord(clause.columns[2], end_row)))
        legs.append((Direction.E, Coord(plan.next_column(clause.index), end_row)))

    legs.append((Direction.N, None))
    return legs


def trace_route(board: Board, legs: Sequence[Leg]) -> JumpSequence:
    """
    Play a route on a board.

    Raises:
        WitnessError: a leg is blocked, overshoots its target, or the
            final leg does not win
    """
    landings: list[Coord] = []
    current = board
    for number, (direction, target) in enumerate(legs, start=1):
        while True:
            outcome = jump_outcome(current, direction)
            if outcome is None:
                raise WitnessError(f"leg {number} ({direction.name} to {target}) blocked at {current.ball}")
            landings.append(outcome.landing)
            if outcome.winning:
                if target is not None or number != len(legs):
                    raise WitnessError(f"leg {number} won early at {outcome.landing}")
                return JumpSequence(landings=tuple(landings))
            current = apply_outcome(current, outcome)
            if target is not None and current.ball == target:
                break
            if target is not None and _passed(current.ball, target, direction):
                raise WitnessError(f"leg {number} overshot {target} at {current.ball}")
    raise WitnessError("route ends without a winning jump")


def _passed(ball: Coord, target: Coord, direction: Direction) -> bool:
    along = (target.x - ball.x) * direction.dx + (target.y - ball.y) * direction.dy
    return along < 0


def sequence_from_path_choice(instance: CompiledInstance, choice: PathChoice) -> JumpSequence:
    return trace_route(instance.board, route_legs(instance.plan, choice))


# =============================================================================
# Translations
# =============================================================================

def assignment_to_sequence(instance: CompiledInstance, assignment: Assignment) -> JumpSequence:
    """
    Winning sequence for a satisfying assignment.

    Each clause is crossed on the lowest-indexed line whose literal is
    true.

    Raises:
        UnsatisfiedClauseError: first clause the assignment leaves false
        WitnessError: assignment length differs from the formula
    """
    formula = instance.formula
    if len(assignment) != formula.num_vars:
        raise WitnessError(f"assignment has {len(assignment)} values, formula has {formula.num_vars} variables")
    lines = []
    for index, clause in enumerate(formula.clauses):
        term = next(
            (j for j, lit in enumerate(clause.literals) if lit.is_true_under(assignment.values)),
            None,
        )
        if term is None:
            raise UnsatisfiedClauseError(index)
        lines.append(term)
    choice = PathChoice(values=assignment.values, lines=tuple(lines))
    sequence = sequence_from_path_choice(instance, choice)
    logger.debug("assignment %s -> %d-jump sequence", assignment.to_text(), len(sequence))
    return sequence


def path_choice_from_sequence(instance: CompiledInstance, sequence: JumpSequence) -> PathChoice:
    """
    Which row per variable and which line per clause a winning sequence used.

    A clause crossed on several lines is attributed to its lowest-indexed
    used line whose literal holds under the recovered values.

    Raises:
        WitnessError: the sequence is not a winning sequence of the board
        ManifestInconsistencyError: a variable with zero or two rows used,
            or a clause with no usable line
    """
    verdict = verify_sequence(instance.board, sequence)
    if not verdict.is_winning:
        raise WitnessError(f"not a winning sequence: {verdict.describe()}")
    plan = instance.plan
    removed = verdict.removed

    # A line counts as used when its marker man was jumped. Every line is one
    # run of men crossed by a single jump, so the marker is removed exactly
    # when some landing passes an interior cell of that line.
    values = []
    for lines in plan.variables:
        upper = plan.row_marker(lines.index, True) in removed
        lower = plan.row_marker(lines.index, False) in removed
        if upper == lower:
            state = "both rows" if upper else "neither row"
            raise ManifestInconsistencyError("variable", lines.index, f"sequence used {state}")
        values.append(upper)

    chosen = []
    for clause in plan.clauses:
        used = [j for j in range(3) if plan.line_marker(clause.index, j) in removed]
        if not used:
            raise ManifestInconsistencyError("clause", clause.index, "sequence used none of its lines")
        if len(used) == 1:
            chosen.append(used[0])
            continue
        true_lines = [j for j in used if clause.literals[j].is_true_under(values)]
        if not true_lines:
            raise ManifestInconsistencyError("clause", clause.index, "no used line has a true literal")
        chosen.append(true_lines[0])

    return PathChoice(values=tuple(values), lines=tuple(chosen))


def sequence_to_assignment(instance: CompiledInstance, sequence: JumpSequence) -> Assignment:
    """
    Satisfying assignment read from a winning sequence.

    Raises:
        WitnessError: not a winning sequence, or the recovered values fail
            the formula (a gadget bug)
    """
    choice = path_choice_from_sequence(instance, sequence)
    assignment = Assignment(values=choice.values)
    if not evaluate(instance.formula, assignment):
        raise WitnessError("recovered assignment does not satisfy the formula")
    return assignment


def simplify_sequence(instance: CompiledInstance, sequence: JumpSequence) -> JumpSequence:
    """
    Equivalent winning sequence that crosses each clause on one line.

    Canonical sequences come back unchanged.
    """
    return sequence_from_path_choice(instance, path_choice_from_sequence(instance, sequence))

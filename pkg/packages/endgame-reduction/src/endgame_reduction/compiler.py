"""
Endgame Reduction — Compiler

Turns a 3-CNF formula into a Phutball position whose mover can win in
one move exactly when the formula is satisfiable.

Pipeline:
1. order_clause_variables()   reorder literals inside each clause
2. plan_layout()              rows, columns, gadget anchors
3. build_board()              draw lines, then stamp gadgets

compile_formula() is deterministic: the same formula always yields the
same board and plan.
"""
from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from endgame_phutball import Board, Coord
from endgame_sat import CnfFormula, order_clause_variables

from endgame_reduction.layout import LayoutPlan, dimension_bounds, dimensions, plan_layout
from endgame_reduction.stamp import stamp_cells
from endgame_reduction.templates import GadgetKind

logger = logging.getLogger(__name__)

_CUT_KINDS = (GadgetKind.CROSSING, GadgetKind.INTERACTION)


class CompiledInstance(BaseModel):
    """A reduction board with the plan and ordered formula that produced it."""

    model_config = ConfigDict(frozen=True)

    formula: CnfFormula
    plan: LayoutPlan
    board: Board


class CompileReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_vars: int
    num_clauses: int
    width: int
    height: int
    men: int
    widened_pairs: int
    crossings: int
    interactions: int
    width_bound: int
    height_bound: int

    @property
    def within_bounds(self) -> bool:
        return self.width <= self.width_bound and self.height <= self.height_bound


def line_cells(plan: LayoutPlan) -> set[Coord]:
    """Men of every straight line segment, before gadgets are stamped."""
    cells: set[Coord] = set()
    c_left, c_right = plan.left_column, plan.right_column
    y_bottom, y_top = plan.bottom_row, plan.top_row

    def row(y: int, x_from: int, x_to: int) -> None:
        cells.update(Coord(x, y) for x in range(x_from, x_to + 1))

    def column(x: int, y_from: int, y_to: int) -> None:
        cells.update(Coord(x, y) for y in range(y_from, y_to + 1))

    for lines in plan.variables:
        row(lines.upper, c_left + 1, c_right - 1)
        row(lines.lower, c_left + 1, c_right - 1)
        column(lines.exit_column, lines.lower - 2, lines.lower - 1)

    if plan.return_row is not None:
        column(c_right, y_bottom - 2, y_bottom - 1)
        row(plan.return_row, c_left + 1, c_right - 1)
        column(c_left, plan.return_row + 1, plan.return_row + 2)

    first = plan.clauses[0].columns[0] if plan.clauses else plan.goal_column
    row(y_bottom, c_left + 1, first - 1)

    for clause in plan.clauses:
        for x in clause.columns:
            column(x, y_bottom + 1, y_top - 1)
        exit_row = y_top if clause.upward else y_bottom
        row(exit_row, clause.columns[2] + 1, plan.next_column(clause.index) - 1)

    if not plan.goal_on_top:
        column(plan.goal_column, y_bottom + 1, y_top)

    return cells


def build_board(plan: LayoutPlan) -> Board:
    """
    Draw the plan's lines and stamp its gadgets.

    Lines are cut where crossing and interaction gadgets sit; stamping
    then restores exactly the men those gadgets call for.

    Raises:
        GadgetOverlapError: two gadgets or a gadget and a line collide
    """
    men = line_cells(plan)
    for placement in plan.placements:
        if placement.kind in _CUT_KINDS:
            ax, ay = placement.anchor
            men.difference_update(
                Coord(ax + dx, ay + dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1)
            )
    for placement in plan.placements:
        stamp_cells(men, placement.template(), placement.anchor, plan.width, plan.height)
    return Board(width=plan.width, height=plan.height, ball=plan.ball, men=frozenset(men))


def compile_formula(formula: CnfFormula) -> CompiledInstance:
    """
    Compile a formula into a reduction board.

    Literals are reordered inside each clause first; the returned
    instance carries the reordered formula, which is equivalent to the
    input.

    Raises:
        SpacingInfeasibleError: interaction gadgets could not be spaced
        GadgetOverlapError: internal layout collision
    """
    ordered = order_clause_variables(formula)
    plan = plan_layout(ordered)
    board = build_board(plan)
    width, height = dimensions(plan)
    logger.info(
        "compiled n=%d m=%d into %dx%d board with %d men",
        formula.num_vars, formula.num_clauses, width, height, board.man_count,
    )
    return CompiledInstance(formula=ordered, plan=plan, board=board)


def compile_report(instance: CompiledInstance) -> CompileReport:
    plan = instance.plan
    width_bound, height_bound = dimension_bounds(plan)
    return CompileReport(
        num_vars=plan.num_vars,
        num_clauses=plan.num_clauses,
        width=plan.width,
        height=plan.height,
        men=instance.board.man_count,
        widened_pairs=plan.widened_pairs,
        crossings=sum(1 for c in plan.crossings if c.kind is GadgetKind.CROSSING),
        interactions=sum(1 for c in plan.crossings if c.kind is GadgetKind.INTERACTION),
        width_bound=width_bound,
        height_bound=height_bound,
    )

"""
Endgame Reduction — Layout Planner

Assigns every row, column and gadget anchor of the reduction board for
an (already ordered) 3-CNF formula. The plan is pure data; the compiler
turns it into men.

Geometry (rows grow toward the goal, columns rightward):

    yt + 3 = H-1   goal row
    yt             clause row on top (fan-in of upward clauses)
    A_i, B_i       variable i: upper (true) and lower (false) rows,
                   A_i = yb + 6(n - i), B_i = A_i - 3
    yb             clause row at the bottom (fan-out of upward clauses)
    yr             return row, only when n is odd

Variable 0 starts at the left frame column and runs rightward; each
variable alternates direction. Clause k runs upward when k is even and
downward when k is odd. Clause columns are 3 apart, or 4 apart where two
neighbouring columns carry the same literal.
"""
from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from endgame_phutball import Coord
from endgame_sat import CnfFormula, Literal

from endgame_reduction.errors import SpacingInfeasibleError
from endgame_reduction.templates import GadgetKind, GadgetTemplate, build_template

logger = logging.getLogger(__name__)

ROW_CONSTANT = 11        # H <= 6n + ROW_CONSTANT
COLUMN_CONSTANT = 9      # W <= 9m + COLUMN_CONSTANT + widened_pairs
COLUMN_SPACING = 3
WIDE_SPACING = 4
VARIABLE_PITCH = 6
LEFT_COLUMN = 1


class VariableLines(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    upper: int          # row A: used when the variable is true
    lower: int          # row B: used when the variable is false
    rightward: bool
    entry_column: int
    exit_column: int

    def row(self, value: bool) -> int:
        return self.upper if value else self.lower


class ClauseLines(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=0)
    columns: tuple[int, int, int]
    literals: tuple[Literal, Literal, Literal]
    upward: bool

    @property
    def gaps(self) -> tuple[int, int]:
        return (self.columns[1] - self.columns[0], self.columns[2] - self.columns[1])


class CrossingEntry(BaseModel):
    """Where a variable row meets a vertical line. clause is None on the goal column."""

    model_config = ConfigDict(frozen=True)

    kind: GadgetKind
    at: Coord
    variable: int
    clause: Optional[int] = None
    term: Optional[int] = None


class GadgetPlacement(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: GadgetKind
    anchor: Coord
    gaps: Optional[tuple[int, int]] = None
    mirror_x: bool = False
    mirror_y: bool = False

    def template(self) -> GadgetTemplate:
        return build_template(self.kind, self.gaps, mirror_x=self.mirror_x, mirror_y=self.mirror_y)


class LayoutPlan(BaseModel):
    """
    Every coordinate the compiler needs.

    INVARIANTS:
    - height <= 6 * num_vars + ROW_CONSTANT
    - width <= 9 * num_clauses + COLUMN_CONSTANT + widened_pairs
    - interaction gadgets sharing a row are at least 4 columns apart
    """

    model_config = ConfigDict(frozen=True)

    num_vars: int
    width: int
    height: int
    left_column: int
    right_column: int
    bottom_row: int
    top_row: int
    return_row: Optional[int]
    goal_column: int
    ball: Coord
    widened_pairs: int
    variables: tuple[VariableLines, ...]
    clauses: tuple[ClauseLines, ...]
    crossings: tuple[CrossingEntry, ...]
    placements: tuple[GadgetPlacement, ...]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def final_row(self) -> int:
        """Row on which the last clause (or the entry row) reaches the goal column."""
        if self.clauses and self.clauses[-1].upward:
            return self.top_row
        return self.bottom_row

    @property
    def goal_on_top(self) -> bool:
        return self.final_row == self.top_row

    def row_marker(self, variable: int, value: bool) -> Coord:
        """First man of a variable row next to its entry junction; gone iff the row was used."""
        lines = self.variables[variable]
        step = 1 if lines.rightward else -1
        return Coord(lines.entry_column + step, lines.row(value))

    def line_marker(self, clause: int, term: int) -> Coord:
        """Bottom man of a clause column; gone iff the column was used."""
        return Coord(self.clauses[clause].columns[term], self.bottom_row + 1)

    def next_column(self, clause: int) -> int:
        """Column the exit connector of a clause leads to."""
        if clause + 1 < len(self.clauses):
            return self.clauses[clause + 1].columns[0]
        return self.goal_column


# =============================================================================
# Planning
# =============================================================================

def plan_columns(formula: CnfFormula) -> tuple[list[tuple[int, int, int]], int]:
    """Clause columns in order, and the number of widened neighbour pairs."""
    x = LEFT_COLUMN + COLUMN_SPACING
    previous: Optional[Literal] = None
    widened = 0
    columns = []
    for clause in formula.clauses:
        cols = []
        for literal in clause.literals:
            if previous is not None:
                gap = WIDE_SPACING if literal == previous else COLUMN_SPACING
                widened += gap == WIDE_SPACING
                x += gap
            cols.append(x)
            previous = literal
        columns.append(tuple(cols))
    return columns, widened


def plan_layout(formula: CnfFormula) -> LayoutPlan:
    """
    Plan the board for a formula whose clause literals are already ordered.

    Raises:
        SpacingInfeasibleError: two interaction gadgets on a row closer than 4
    """
    n = formula.num_vars
    m = formula.num_clauses
    c_left = LEFT_COLUMN

    if n % 2 == 1:
        y_return: Optional[int] = 1
        y_bottom = 4
    else:
        y_return = None
        y_bottom = 1
    y_top = y_bottom + VARIABLE_PITCH * n + 3
    height = y_top + 4

    columns, widened = plan_columns(formula)
    goal = columns[-1][2] + COLUMN_SPACING if columns else c_left + COLUMN_SPACING
    c_right = goal + 3
    width = c_right + 2

    variables = []
    for i in range(n):
        upper = y_bottom + VARIABLE_PITCH * (n - i)
        rightward = i % 2 == 0
        variables.append(
            VariableLines(
                index=i,
                upper=upper,
                lower=upper - 3,
                rightward=rightward,
                entry_column=c_left if rightward else c_right,
                exit_column=c_right if rightward else c_left,
            )
        )

    clauses = [
        ClauseLines(index=k, columns=columns[k], literals=clause.literals, upward=k % 2 == 0)
        for k, clause in enumerate(formula.clauses)
    ]

    crossings: list[CrossingEntry] = []
    for clause in clauses:
        for j, (x, literal) in enumerate(zip(clause.columns, clause.literals)):
            for lines in variables:
                for value, y in ((True, lines.upper), (False, lines.lower)):
                    # A true literal's line is cut by the row of the opposite value.
                    interacts = lines.index == literal.variable and value == literal.negated
                    crossings.append(
                        CrossingEntry(
                            kind=GadgetKind.INTERACTION if interacts else GadgetKind.CROSSING,
                            at=Coord(x, y),
                            variable=lines.index,
                            clause=clause.index,
                            term=j,
                        )
                    )

    final_on_top = bool(clauses) and clauses[-1].upward
    if not final_on_top:
        for lines in variables:
            for y in (lines.upper, lines.lower):
                crossings.append(
                    CrossingEntry(kind=GadgetKind.CROSSING, at=Coord(goal, y), variable=lines.index)
                )

    _check_spacing(crossings)

    placements: list[GadgetPlacement] = []
    for lines in variables:
        mirror = not lines.rightward
        placements.append(
            GadgetPlacement(kind=GadgetKind.FAN_OUT_2, anchor=Coord(lines.entry_column, lines.upper), mirror_x=mirror)
        )
        placements.append(
            GadgetPlacement(kind=GadgetKind.FAN_IN_2, anchor=Coord(lines.exit_column, lines.upper), mirror_x=mirror)
        )
    for clause in clauses:
        start_row, end_row = (y_bottom, y_top) if clause.upward else (y_top, y_bottom)
        x0 = clause.columns[0]
        placements.append(
            GadgetPlacement(
                kind=GadgetKind.FAN_OUT_3, anchor=Coord(x0, start_row),
                gaps=clause.gaps, mirror_y=not clause.upward,
            )
        )
        placements.append(
            GadgetPlacement(
                kind=GadgetKind.FAN_IN_3, anchor=Coord(x0, end_row),
                gaps=clause.gaps, mirror_y=not clause.upward,
            )
        )
    for entry in crossings:
        placements.append(GadgetPlacement(kind=entry.kind, anchor=entry.at))
    placements.append(GadgetPlacement(kind=GadgetKind.GOAL_PATH, anchor=Coord(goal, height - 3)))

    ball = Coord(c_left, variables[0].upper) if variables else Coord(c_left, y_bottom)

    plan = LayoutPlan(
        num_vars=n,
        width=width,
        height=height,
        left_column=c_left,
        right_column=c_right,
        bottom_row=y_bottom,
        top_row=y_top,
        return_row=y_return,
        goal_column=goal,
        ball=ball,
        widened_pairs=widened,
        variables=tuple(variables),
        clauses=tuple(clauses),
        crossings=tuple(crossings),
        placements=tuple(placements),
    )
    logger.debug(
        "planned %dx%d board for n=%d m=%d (%d widened pairs)", width, height, n, m, widened
    )
    return plan


def _check_spacing(crossings: list[CrossingEntry]) -> None:
    by_row: dict[int, list[int]] = {}
    for entry in crossings:
        if entry.kind is GadgetKind.INTERACTION:
            by_row.setdefault(entry.at.y, []).append(entry.at.x)
    for row, xs in sorted(by_row.items()):
        xs.sort()
        for left, right in zip(xs, xs[1:]):
            if right - left < 4:
                raise SpacingInfeasibleError(row, (left, right))


def dimension_bounds(plan: LayoutPlan) -> tuple[int, int]:
    """
    (width bound, height bound) the plan must respect.

    The row bound is 6n + ROW_CONSTANT. The column bound is
    9m + COLUMN_CONSTANT + w, where w counts the neighbouring vertical lines
    spaced 4 instead of 3 because they carry the same literal. w is not a
    constant: 0 <= w <= 3m - 1, and w = 0 when every clause has three
    distinct variables. Padded clauses of one- and two-variable formulas
    are where widening shows up, so W - 9m can exceed COLUMN_CONSTANT there.
    """
    return (
        9 * plan.num_clauses + COLUMN_CONSTANT + plan.widened_pairs,
        6 * plan.num_vars + ROW_CONSTANT,
    )


def dimensions(plan: LayoutPlan) -> tuple[int, int]:
    """
    (W, H) of the planned board.

    Raises:
        AssertionError: the plan breaks the 6n + C_r row or 9m + C_c + w column bound
    """
    width_bound, height_bound = dimension_bounds(plan)
    if plan.width > width_bound or plan.height > height_bound:
        raise AssertionError(
            f"board {plan.width}x{plan.height} exceeds bound {width_bound}x{height_bound}"
        )
    return plan.width, plan.height

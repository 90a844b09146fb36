"""
Endgame Reduction — Layout Manifest

Line-oriented text record of a layout plan, written next to a compiled
board so that witnesses can be translated later without recompiling.

Format (one record per line, fields separated by spaces):

    endgame-layout 1
    formula <n> <m>
    dims <W> <H>
    constants <row constant> <column constant>
    frame <cL> <cR> <yb> <yt> <yr or -> <G>
    ball <x> <y>
    widened <count>
    variable <i> <A> <B> <E|W>
    clause <k> <X0> <X1> <X2> <N|S> <lit> <lit> <lit>
    crossing <kind> <x> <y> <variable> <clause or -> <term or ->

Literals use DIMACS numbering. Blank lines and lines starting with '#'
are ignored.
"""
from __future__ import annotations

import logging
from typing import Optional

from endgame_phutball import Board
from endgame_sat import Clause, CnfFormula, Literal

from endgame_reduction.compiler import CompiledInstance
from endgame_reduction.errors import ManifestFormatError
from endgame_reduction.layout import COLUMN_CONSTANT, ROW_CONSTANT, LayoutPlan, plan_layout

logger = logging.getLogger(__name__)

MANIFEST_HEADER = "endgame-layout 1"


def write_manifest(plan: LayoutPlan) -> str:
    lines = [
        MANIFEST_HEADER,
        f"formula {plan.num_vars} {plan.num_clauses}",
        f"dims {plan.width} {plan.height}",
        f"constants {ROW_CONSTANT} {COLUMN_CONSTANT}",
        "frame {} {} {} {} {} {}".format(
            plan.left_column, plan.right_column, plan.bottom_row, plan.top_row,
            "-" if plan.return_row is None else plan.return_row, plan.goal_column,
        ),
        f"ball {plan.ball.x} {plan.ball.y}",
        f"widened {plan.widened_pairs}",
    ]
    for v in plan.variables:
        lines.append(f"variable {v.index} {v.upper} {v.lower} {'E' if v.rightward else 'W'}")
    for c in plan.clauses:
        cols = " ".join(str(x) for x in c.columns)
        lits = " ".join(str(lit.to_dimacs()) for lit in c.literals)
        lines.append(f"clause {c.index} {cols} {'N' if c.upward else 'S'} {lits}")
    for e in plan.crossings:
        clause = "-" if e.clause is None else e.clause
        term = "-" if e.term is None else e.term
        lines.append(f"crossing {e.kind.value} {e.at.x} {e.at.y} {e.variable} {clause} {term}")
    return "\n".join(lines) + "\n"


def formula_from_plan(plan: LayoutPlan) -> CnfFormula:
    """The ordered formula a plan was built from."""
    return CnfFormula(
        num_vars=plan.num_vars,
        clauses=tuple(Clause(literals=c.literals) for c in plan.clauses),
    )


def parse_manifest(text: str) -> LayoutPlan:
    """
    Parse a manifest and check it against a fresh plan of its own formula.

    Raises:
        ManifestFormatError: syntax errors, or any record disagreeing with
            the plan rebuilt from the recorded clauses
    """
    records: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        records.append((number, stripped.split()))

    if not records or " ".join(records[0][1]) != MANIFEST_HEADER:
        raise ManifestFormatError(records[0][0] if records else None, f"expected header {MANIFEST_HEADER!r}")

    sizes: Optional[tuple[int, int]] = None
    clauses: list[tuple[int, Clause]] = []
    for number, fields in records[1:]:
        if fields[0] == "formula":
            sizes = tuple(_ints(number, fields, 2))
        elif fields[0] == "clause":
            values = _ints(number, fields[:5] + fields[6:], 7)
            try:
                clause = Clause(literals=tuple(Literal.from_dimacs(v) for v in values[4:]))
            except ValueError as exc:
                raise ManifestFormatError(number, str(exc)) from exc
            clauses.append((number, clause))
    if sizes is None:
        raise ManifestFormatError(None, "missing 'formula' record")
    num_vars, num_clauses = sizes
    if len(clauses) != num_clauses:
        raise ManifestFormatError(None, f"expected {num_clauses} clauses, found {len(clauses)}")

    try:
        formula = CnfFormula(num_vars=num_vars, clauses=tuple(c for _, c in clauses))
    except ValueError as exc:
        raise ManifestFormatError(None, str(exc)) from exc

    plan = plan_layout(formula)
    expected = write_manifest(plan).splitlines()
    expected_records = [line.split() for line in expected]
    actual_records = [fields for _, fields in records]
    for expect, (number, fields) in zip(expected_records, records):
        if fields != expect:
            raise ManifestFormatError(
                number, f"record {' '.join(fields)!r} disagrees with layout ({' '.join(expect)!r})"
            )
    if len(actual_records) != len(expected_records):
        raise ManifestFormatError(
            None, f"expected {len(expected_records)} records, found {len(actual_records)}"
        )
    logger.debug("manifest for n=%d m=%d verified", num_vars, num_clauses)
    return plan


def _ints(number: int, fields: list[str], count: int) -> list[int]:
    values = fields[1:]
    if len(values) != count:
        raise ManifestFormatError(number, f"'{fields[0]}' expects {count} fields, got {len(values)}")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise ManifestFormatError(number, f"non-integer field in '{fields[0]}' record") from None


def instance_from_manifest(board: Board, text: str) -> CompiledInstance:
    """
    Reattach a manifest to the board it was written with.

    Raises:
        ManifestFormatError: manifest invalid or its dimensions or ball
            disagree with the board
    """
    plan = parse_manifest(text)
    if (board.width, board.height) != (plan.width, plan.height) or board.ball != plan.ball:
        raise ManifestFormatError(
            None,
            f"board {board.width}x{board.height} with ball {board.ball} does not match "
            f"layout {plan.width}x{plan.height} with ball {plan.ball}",
        )
    return CompiledInstance(formula=formula_from_plan(plan), plan=plan, board=board)

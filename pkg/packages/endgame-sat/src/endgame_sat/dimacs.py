"""
Endgame SAT — DIMACS Reader/Writer

Standard DIMACS CNF dialect: ``c`` comment lines, one ``p cnf <n> <m>``
header, zero-terminated clauses that may span lines. A ``%`` line ends
the clause section, as in the SATLIB benchmark files.

INVARIANT: parse_dimacs(write_dimacs(parse_dimacs(text))) equals
parse_dimacs(text). The writer emits each clause's distinct literals in
slot order, which the reader re-normalizes to the same three slots.
"""
from __future__ import annotations

import logging

from endgame_sat.errors import DimacsSyntaxError
from endgame_sat.formula import Clause, CnfFormula

logger = logging.getLogger(__name__)


def parse_dimacs(text: str) -> CnfFormula:
    """
    Parse DIMACS CNF text into a normalized formula.

    Clause literal order is preserved as written; clauses with one or two
    distinct literals are padded (see Clause.of).

    Args:
        text: Complete DIMACS document

    Returns:
        CnfFormula with every clause normalized to three slots

    Raises:
        DimacsSyntaxError: malformed header, token, or clause count
        ClauseWidthError: a clause with more than three distinct literals
        EmptyClauseError: a bare ``0`` clause
    """
    num_vars: int | None = None
    declared_clauses = 0
    clauses: list[Clause] = []
    pending: list[int] = []
    pending_line: int | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("%"):
            # SATLIB trailer: "%" then a lone "0"
            break
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsSyntaxError(line_no, "duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsSyntaxError(line_no, f"expected 'p cnf <vars> <clauses>', got {line!r}")
            try:
                num_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsSyntaxError(line_no, "problem line counts must be integers") from None
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsSyntaxError(line_no, "problem line counts must be non-negative")
            continue
        if num_vars is None:
            raise DimacsSyntaxError(line_no, "clause before problem line")

        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsSyntaxError(line_no, f"invalid literal {token!r}") from None
            if value == 0:
                clauses.append(Clause.from_dimacs(pending, line=pending_line or line_no))
                pending = []
                pending_line = None
                continue
            if abs(value) > num_vars:
                raise DimacsSyntaxError(
                    line_no, f"literal {value} exceeds declared variable count {num_vars}"
                )
            if not pending:
                pending_line = line_no
            pending.append(value)

    if num_vars is None:
        raise DimacsSyntaxError(None, "missing problem line")
    if pending:
        raise DimacsSyntaxError(pending_line, "clause not terminated by 0")
    if len(clauses) != declared_clauses:
        raise DimacsSyntaxError(
            None, f"problem line declares {declared_clauses} clauses, found {len(clauses)}"
        )

    logger.debug("parsed DIMACS formula n=%d m=%d", num_vars, len(clauses))
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def write_dimacs(formula: CnfFormula, *, comment: str | None = None) -> str:
    """Serialize a formula in the same dialect parse_dimacs reads."""
    lines: list[str] = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    for clause in formula.clauses:
        literals = " ".join(str(lit.to_dimacs()) for lit in clause.distinct_literals())
        lines.append(f"{literals} 0")
    return "\n".join(lines) + "\n"

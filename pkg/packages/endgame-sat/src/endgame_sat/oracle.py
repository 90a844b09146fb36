"""
Endgame SAT — Evaluation and Brute-Force Oracle

The oracle enumerates every assignment. It deliberately shares no logic
with the Phutball reduction so the two can be cross-checked.
"""
from __future__ import annotations

import itertools
import logging
from typing import Optional

from endgame_sat.errors import OracleLimitError
from endgame_sat.formula import Assignment, CnfFormula

logger = logging.getLogger(__name__)

ORACLE_VAR_LIMIT = 24


def evaluate(formula: CnfFormula, assignment: Assignment) -> bool:
    """
    True iff every clause has at least one true literal.

    Raises:
        ValueError: assignment length differs from formula.num_vars
    """
    if len(assignment) != formula.num_vars:
        raise ValueError(
            f"assignment covers {len(assignment)} variables, formula has {formula.num_vars}"
        )
    values = assignment.values
    return all(clause.is_satisfied_by(values) for clause in formula.clauses)


def brute_force_sat(
    formula: CnfFormula,
    *,
    limit: int = ORACLE_VAR_LIMIT,
) -> Optional[Assignment]:
    """
    Return the lexicographically first satisfying assignment, or None.

    Enumeration order is False before True with variable 0 as the most
    significant position, so (F, F, ..., F) is tried first.

    Raises:
        OracleLimitError: formula.num_vars exceeds limit
    """
    if formula.num_vars > limit:
        raise OracleLimitError(formula.num_vars, limit)

    clauses = formula.clauses
    tried = 0
    for values in itertools.product((False, True), repeat=formula.num_vars):
        tried += 1
        if all(clause.is_satisfied_by(values) for clause in clauses):
            logger.debug("oracle: satisfiable after %d assignments", tried)
            return Assignment(values=values)
    logger.debug("oracle: unsatisfiable, %d assignments tried", tried)
    return None


def count_models(formula: CnfFormula, *, limit: int = ORACLE_VAR_LIMIT) -> int:
    """Number of satisfying assignments (same enumeration as brute_force_sat)."""
    if formula.num_vars > limit:
        raise OracleLimitError(formula.num_vars, limit)
    return sum(
        1
        for values in itertools.product((False, True), repeat=formula.num_vars)
        if all(clause.is_satisfied_by(values) for clause in formula.clauses)
    )

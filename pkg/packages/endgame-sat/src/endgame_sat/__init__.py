"""
Endgame SAT — 3-CNF Core

Formula primitives, DIMACS I/O, assignment evaluation, a brute-force
satisfiability oracle and clause literal ordering.

Package Structure:
- formula.py   - Literal, Clause, CnfFormula, Assignment
- dimacs.py    - parse_dimacs() / write_dimacs()
- oracle.py    - evaluate(), brute_force_sat()
- ordering.py  - order_clause_variables()
- generator.py - seeded random formulas
- errors.py    - SatError hierarchy

Design Principles:
1. NO imports from sibling endgame packages
2. All types immutable after construction
3. Oracle is brute force so it cannot share bugs with the reduction
"""
from __future__ import annotations

from endgame_sat.errors import (
    SatError,
    DimacsSyntaxError,
    ClauseWidthError,
    EmptyClauseError,
    OracleLimitError,
)
from endgame_sat.formula import (
    CLAUSE_SLOTS,
    Literal,
    Clause,
    CnfFormula,
    Assignment,
)
from endgame_sat.dimacs import parse_dimacs, write_dimacs
from endgame_sat.oracle import (
    ORACLE_VAR_LIMIT,
    evaluate,
    brute_force_sat,
    count_models,
)
from endgame_sat.ordering import (
    ClauseOrdering,
    boundary_flags,
    count_equal_neighbours,
    plan_clause_order,
    order_clause_variables,
)
from endgame_sat.generator import random_clause, random_formula, random_suite

__all__ = [
    # Errors
    "SatError",
    "DimacsSyntaxError",
    "ClauseWidthError",
    "EmptyClauseError",
    "OracleLimitError",
    # Formula
    "CLAUSE_SLOTS",
    "Literal",
    "Clause",
    "CnfFormula",
    "Assignment",
    # DIMACS
    "parse_dimacs",
    "write_dimacs",
    # Oracle
    "ORACLE_VAR_LIMIT",
    "evaluate",
    "brute_force_sat",
    "count_models",
    # Ordering
    "ClauseOrdering",
    "boundary_flags",
    "count_equal_neighbours",
    "plan_clause_order",
    "order_clause_variables",
    # Generator
    "random_clause",
    "random_formula",
    "random_suite",
]

__version__ = "1.0.0"

"""
Endgame SAT — Seeded Random 3-CNF

All randomness comes from a caller-supplied random.Random (Mersenne
Twister), so a seed fully determines the generated suite.
"""
from __future__ import annotations

import random

from endgame_sat.formula import Clause, CnfFormula, Literal


def random_clause(rng: random.Random, num_vars: int) -> Clause:
    """min(3, n) distinct variables, each negated with probability 1/2."""
    if num_vars < 1:
        raise ValueError("a clause needs at least one variable")
    variables = rng.sample(range(num_vars), min(3, num_vars))
    return Clause.of(Literal(variable=v, negated=rng.random() < 0.5) for v in variables)


def random_formula(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    """Uniform random formula; clause draws happen in index order."""
    if num_clauses and num_vars < 1:
        raise ValueError("clauses need at least one variable")
    return CnfFormula(
        num_vars=num_vars,
        clauses=tuple(random_clause(rng, num_vars) for _ in range(num_clauses)),
    )


def random_suite(
    seed: int,
    count: int,
    vars_range: tuple[int, int],
    clauses_range: tuple[int, int],
) -> list[CnfFormula]:
    """
    Generate count formulas with n and m drawn uniformly from the inclusive ranges.

    The draw order per instance is n, m, then the clauses, from one
    random.Random(seed) shared by the whole suite.
    """
    rng = random.Random(seed)
    suite = []
    for _ in range(count):
        n = rng.randint(*vars_range)
        m = rng.randint(*clauses_range)
        suite.append(random_formula(rng, n, m))
    return suite

"""
Endgame SAT — Clause Literal Ordering

Reorders the literals inside each clause so that a clause's first
variable differs from the previous clause's last variable. The Phutball
layout puts those two literals on neighbouring vertical lines; when they
are equal literals their interaction gadgets would sit on the same row
three columns apart, which forces the compiler to widen the spacing.

Ordering is an exact dynamic program over the (at most six) distinct
permutations of every clause, minimizing first the number of
same-variable boundaries and then the number of equal neighbouring
literals. Ties go to the lexicographically smallest permutation choice,
so an already-optimal formula comes back unchanged.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from endgame_sat.formula import Clause, CnfFormula

PERMUTATIONS: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations(range(3)))  # type: ignore[assignment]


class ClauseOrdering(BaseModel):
    """Result of ordering: the reordered formula plus one flag per adjacent clause pair."""

    model_config = ConfigDict(frozen=True)

    formula: CnfFormula
    achieved: tuple[bool, ...]
    equal_neighbours: int

    @property
    def unachievable_pairs(self) -> list[int]:
        """Indices k (of the later clause) whose boundary still shares a variable."""
        return [k + 1 for k, ok in enumerate(self.achieved) if not ok]


def _distinct_orders(clause: Clause) -> list[Clause]:
    orders: list[Clause] = []
    for perm in PERMUTATIONS:
        candidate = clause.permuted(perm)
        if candidate not in orders:
            orders.append(candidate)
    return orders


def _internal_equal_pairs(clause: Clause) -> int:
    lits = clause.literals
    return sum(1 for j in range(2) if lits[j] == lits[j + 1])


def boundary_flags(clauses: Sequence[Clause]) -> tuple[bool, ...]:
    """For each adjacent pair, True when first(k).variable != last(k-1).variable."""
    return tuple(
        clauses[k].literals[0].variable != clauses[k - 1].literals[2].variable
        for k in range(1, len(clauses))
    )


def count_equal_neighbours(clauses: Sequence[Clause]) -> int:
    """Equal literals on neighbouring slots, inside clauses and across boundaries."""
    total = sum(_internal_equal_pairs(c) for c in clauses)
    total += sum(
        1 for k in range(1, len(clauses)) if clauses[k].literals[0] == clauses[k - 1].literals[2]
    )
    return total


def plan_clause_order(formula: CnfFormula) -> ClauseOrdering:
    """Compute the optimal literal order of every clause."""
    if not formula.clauses:
        return ClauseOrdering(formula=formula, achieved=(), equal_neighbours=0)

    candidates = [_distinct_orders(c) for c in formula.clauses]

    # best[i] = ((conflicts, equal_pairs), choice_path) for candidate i of the current clause
    best = [
        ((0, _internal_equal_pairs(order)), (i,))
        for i, order in enumerate(candidates[0])
    ]
    for k in range(1, len(candidates)):
        previous = candidates[k - 1]
        current: list[tuple[tuple[int, int], tuple[int, ...]]] = []
        for i, order in enumerate(candidates[k]):
            options = []
            for (cost, path) in best:
                last = previous[path[-1]].literals[2]
                first = order.literals[0]
                step = (
                    int(first.variable == last.variable),
                    _internal_equal_pairs(order) + int(first == last),
                )
                options.append(((cost[0] + step[0], cost[1] + step[1]), path + (i,)))
            current.append(min(options))
        best = current

    (_, equal_pairs), path = min(best)
    clauses = tuple(candidates[k][choice] for k, choice in enumerate(path))
    return ClauseOrdering(
        formula=formula.with_clauses(clauses),
        achieved=boundary_flags(clauses),
        equal_neighbours=equal_pairs,
    )


def order_clause_variables(formula: CnfFormula) -> CnfFormula:
    """Reorder literals within clauses; satisfaction semantics are unchanged."""
    return plan_clause_order(formula).formula

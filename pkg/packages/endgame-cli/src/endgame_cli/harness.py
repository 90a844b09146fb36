"""
Endgame CLI — Experiment Harness

Two seeded experiments:

- round trip: random 3-CNF formulas are decided by the brute-force SAT
  oracle and, independently, by compiling to Phutball and searching for a
  winning jump sequence. Witnesses are translated both ways and verified.
- checkers suite: small checkers positions, half uniform and half built
  from a capture chain, are decided by the jump-graph tests and by
  exhaustive capture enumeration. The summary counts the one-move wins
  and kingable men the suite exercised.

Instances are processed in order and rows are reported in that order.
"""
from __future__ import annotations

import logging
import random
from typing import Optional

from pydantic import BaseModel, ConfigDict

from endgame_checkers import (
    can_king,
    has_one_move_win,
    oracle_can_king,
    oracle_one_move_win,
    suite_position,
)
from endgame_cli.config import RunConfig
from endgame_phutball import SearchOptions, find_winning_sequence, verify_sequence
from endgame_reduction import (
    WitnessError,
    assignment_to_sequence,
    compile_formula,
    sequence_to_assignment,
)
from endgame_sat import CnfFormula, brute_force_sat, evaluate, random_suite

logger = logging.getLogger(__name__)


# =============================================================================
# Round trip: 3-SAT <-> Phutball
# =============================================================================

class RoundTripRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    num_vars: int
    num_clauses: int
    width: int
    height: int
    satisfiable: bool
    winnable: Optional[bool]  # None when the node limit was hit
    nodes: int
    witness_ok: bool

    @property
    def agrees(self) -> bool:
        return self.winnable is not None and self.winnable == self.satisfiable and self.witness_ok


class RoundTripReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    rows: tuple[RoundTripRow, ...] = ()

    @property
    def agreed(self) -> int:
        return sum(row.agrees for row in self.rows)

    @property
    def limited(self) -> int:
        return sum(row.winnable is None for row in self.rows)

    @property
    def disagreed(self) -> int:
        return len(self.rows) - self.agreed - self.limited


def suite_formulas(config: RunConfig) -> list[CnfFormula]:
    return random_suite(config.seed, config.count, config.vars_range, config.clauses_range)


def round_trip_instance(index: int, formula: CnfFormula, options: SearchOptions) -> RoundTripRow:
    oracle = brute_force_sat(formula)
    instance = compile_formula(formula)
    result = find_winning_sequence(instance.board, options)

    witness_ok = True
    if oracle is not None:
        try:
            forward = assignment_to_sequence(instance, oracle)
            witness_ok = verify_sequence(instance.board, forward).is_winning
        except WitnessError as exc:
            logger.warning("instance %d: oracle assignment not translatable: %s", index, exc)
            witness_ok = False
    if result.found is not None:
        try:
            witness_ok = witness_ok and evaluate(formula, sequence_to_assignment(instance, result.found))
        except WitnessError as exc:
            logger.warning("instance %d: solver sequence not decodable: %s", index, exc)
            witness_ok = False

    winnable = None if result.limit_hit else result.found is not None
    return RoundTripRow(
        index=index,
        num_vars=formula.num_vars,
        num_clauses=formula.num_clauses,
        width=instance.board.width,
        height=instance.board.height,
        satisfiable=oracle is not None,
        winnable=winnable,
        nodes=result.nodes_expanded,
        witness_ok=witness_ok,
    )


def run_round_trip(config: RunConfig) -> RoundTripReport:
    options = SearchOptions(node_limit=config.node_limit, orthogonal_only=config.orthogonal_only)
    rows = []
    for index, formula in enumerate(suite_formulas(config)):
        row = round_trip_instance(index, formula, options)
        logger.info(
            "instance %d: n=%d m=%d sat=%s win=%s nodes=%d",
            index, row.num_vars, row.num_clauses, row.satisfiable, row.winnable, row.nodes,
        )
        rows.append(row)
    return RoundTripReport(seed=config.seed, rows=tuple(rows))


def _yes_no(value: Optional[bool]) -> str:
    return "limit" if value is None else ("yes" if value else "no")


def render_round_trip(report: RoundTripReport) -> str:
    lines = [f"{'#':>4} {'n':>3} {'m':>3} {'W':>4} {'H':>4} {'sat':>5} {'win':>5} {'nodes':>9} {'witness':>7} {'agree':>5}"]
    for row in report.rows:
        lines.append(
            f"{row.index:>4} {row.num_vars:>3} {row.num_clauses:>3} {row.width:>4} {row.height:>4} "
            f"{_yes_no(row.satisfiable):>5} {_yes_no(row.winnable):>5} {row.nodes:>9} "
            f"{'ok' if row.witness_ok else 'BAD':>7} {_yes_no(row.agrees):>5}"
        )
    lines.append(
        f"RESULT: seed={report.seed} instances={len(report.rows)} agree={report.agreed} "
        f"disagree={report.disagreed} limit={report.limited}"
    )
    return "\n".join(lines) + "\n"


# =============================================================================
# Checkers suite: jump graph vs brute force
# =============================================================================

class CheckersRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    size: int
    mover: str
    pieces: int
    win: bool
    win_oracle: bool
    kings: int
    kings_agree: int
    kingable: int

    @property
    def agrees(self) -> bool:
        return self.win == self.win_oracle and self.kings == self.kings_agree


class CheckersReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    rows: tuple[CheckersRow, ...] = ()

    @property
    def agreed(self) -> int:
        return sum(row.agrees for row in self.rows)

    @property
    def wins(self) -> int:
        return sum(row.win_oracle for row in self.rows)

    @property
    def kingable(self) -> int:
        return sum(row.kingable for row in self.rows)


def run_checkers_suite(config: RunConfig) -> CheckersReport:
    """
    Raises:
        OracleExplosionError: a position has more capture sequences than config.oracle_cap
    """
    rng = random.Random(config.seed)
    rows = []
    for index in range(config.count):
        position = suite_position(rng, index, config.board_sizes, config.max_opponents)
        men = [p for p in position.pieces_of(position.mover) if not p.king]
        verdicts = [can_king(position, p.square).reachable for p in men]
        kings_agree = sum(
            reachable == oracle_can_king(position, p.square, cap=config.oracle_cap)
            for p, reachable in zip(men, verdicts)
        )
        rows.append(
            CheckersRow(
                index=index,
                size=position.width,
                mover=position.mover.value,
                pieces=len(position.pieces),
                win=has_one_move_win(position).winning,
                win_oracle=oracle_one_move_win(position, cap=config.oracle_cap),
                kings=len(men),
                kings_agree=kings_agree,
                kingable=sum(verdicts),
            )
        )
    return CheckersReport(seed=config.seed, rows=tuple(rows))


def render_checkers_suite(report: CheckersReport) -> str:
    lines = [f"{'#':>4} {'N':>2} {'mover':>5} {'pieces':>6} {'win':>4} {'oracle':>6} {'king-tests':>10} {'agree':>5}"]
    for row in report.rows:
        lines.append(
            f"{row.index:>4} {row.size:>2} {row.mover:>5} {row.pieces:>6} "
            f"{_yes_no(row.win):>4} {_yes_no(row.win_oracle):>6} "
            f"{f'{row.kings_agree}/{row.kings}':>10} {_yes_no(row.agrees):>5}"
        )
    lines.append(
        f"RESULT: seed={report.seed} positions={len(report.rows)} agree={report.agreed} "
        f"disagree={len(report.rows) - report.agreed} wins={report.wins} kingable={report.kingable}"
    )
    return "\n".join(lines) + "\n"

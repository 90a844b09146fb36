"""
Endgame Reduction — Gadget Contract Checker

Builds a small harness board around one template and decides every
contract case by exhaustive enumeration.

Harness layout: each non-goal port gets two feeder men stepping outward
along its direction and a vacant sentinel cell one step further. The ball
starts on the sentinel of the case's start port; a case PASSES when some
non-empty jump sequence ends on the target port's sentinel (or wins, for a
goal port). A goal port is put on the harness's top row.
"""
from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict

from endgame_phutball import Board, Coord, JumpSequence, enumerate_sequences

from endgame_reduction.contracts import ContractCase, Expectation, GadgetContract
from endgame_reduction.errors import ContractFormatError
from endgame_reduction.templates import GadgetTemplate, default_templates

logger = logging.getLogger(__name__)

FEEDERS_PER_PORT = 2


class CaseResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    expect: Expectation
    observed: Expectation
    witness: Optional[JumpSequence] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.expect is self.observed


class GadgetReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    kind: str
    cases: tuple[CaseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    def describe(self) -> str:
        lines = [f"{self.label}: {'OK' if self.ok else 'FAILED'}"]
        for case in self.cases:
            mark = "ok" if case.passed else "FAIL"
            lines.append(
                f"  [{mark}] {case.name}: expected {case.expect.value}, got {case.observed.value}"
                + (f" ({case.note})" if case.note else "")
            )
        return "\n".join(lines)


# =============================================================================
# Harness
# =============================================================================

class _Harness:
    """Template plus feeders and sentinels, shifted onto a board."""

    def __init__(self, template: GadgetTemplate):
        self.template = template
        men = set(template.men)
        sentinels: dict[str, Coord] = {}
        cells = set(template.footprint.cells())

        for port in template.ports:
            if port.goal:
                sentinels[port.name] = port.offset
                continue
            for k in range(1, FEEDERS_PER_PORT + 1):
                men.add(port.offset.step(port.direction, k))
            sentinels[port.name] = port.offset.step(port.direction, FEEDERS_PER_PORT + 1)

        cells |= men | set(sentinels.values())
        min_x = min(c.x for c in cells)
        min_y = min(c.y for c in cells)
        max_x = max(c.x for c in cells)
        max_y = max(c.y for c in cells)
        dx, dy = 1 - min_x, 1 - min_y

        goal = template.goal_port
        if goal is not None:
            height = goal.offset.y + dy + 1
        else:
            height = max_y - min_y + 4

        self.width = max_x - min_x + 3
        self.height = height
        self.men = frozenset(Coord(c.x + dx, c.y + dy) for c in men)
        self.sentinels = {name: Coord(c.x + dx, c.y + dy) for name, c in sentinels.items()}

    def board(self, start: str) -> Board:
        return Board(width=self.width, height=self.height, ball=self.sentinels[start], men=self.men)

    def is_goal(self, port: str) -> bool:
        return self.template.port(port).goal


def _find(board: Board, harness: _Harness, target: str):
    """First enumerated non-empty sequence reaching the target sentinel, or None."""
    goal = harness.is_goal(target)
    sentinel = harness.sentinels[target]
    for record in enumerate_sequences(board):
        if not record.sequence.landings:
            continue
        if goal and record.winning:
            return record
        if not goal and not record.winning and record.ball == sentinel:
            return record
    return None


def _run_case(harness: _Harness, case: ContractCase) -> CaseResult:
    board = harness.board(case.start)
    for pre in case.after:
        board = board.with_ball(harness.sentinels[pre.start])
        record = _find(board, harness, pre.target)
        if record is None or record.winning:
            return CaseResult(
                name=case.name,
                expect=case.expect,
                observed=Expectation.BLOCKED,
                note=f"prior traversal {pre.start}->{pre.target} impossible",
            )
        board = board.with_men(remove=record.removed).with_ball(record.ball)

    board = board.with_ball(harness.sentinels[case.start])
    record = _find(board, harness, case.target)
    observed = Expectation.PASS if record is not None else Expectation.BLOCKED
    return CaseResult(
        name=case.name,
        expect=case.expect,
        observed=observed,
        witness=record.sequence if record is not None else None,
    )


# =============================================================================
# Public API
# =============================================================================

def check_gadget(
    template: GadgetTemplate,
    contract: GadgetContract,
    *,
    label: Optional[str] = None,
) -> GadgetReport:
    """
    Decide every case of a contract against a template.

    Raises:
        ContractFormatError: contract kind differs from the template or
            names a port the template lacks
    """
    if contract.kind is not template.kind:
        raise ContractFormatError(
            f"contract for {contract.kind.value} applied to {template.kind.value}"
        )
    names = {p.name for p in template.ports}
    for case in contract.cases:
        used = {case.start, case.target} | {p for t in case.after for p in (t.start, t.target)}
        unknown = sorted(used - names)
        if unknown:
            raise ContractFormatError(f"{contract.kind.value} case {case.name!r}: unknown ports {unknown}")
        if template.port(case.start).goal:
            raise ContractFormatError(f"{contract.kind.value} case {case.name!r}: cannot start at a goal port")

    harness = _Harness(template)
    results = tuple(_run_case(harness, case) for case in contract.cases)
    report = GadgetReport(label=label or template.kind.value, kind=template.kind.value, cases=results)
    if report.ok:
        logger.debug("gadget %s: %d cases hold", report.label, len(results))
    else:
        logger.warning("gadget %s violates its contract", report.label)
    return report


def check_all_gadgets(contracts: dict) -> list[GadgetReport]:
    """Check every template variant the compiler stamps."""
    return [
        check_gadget(template, contracts[template.kind], label=label)
        for label, template in default_templates()
    ]

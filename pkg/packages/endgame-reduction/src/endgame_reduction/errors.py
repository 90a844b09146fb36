"""
Endgame Reduction — Errors
"""
from __future__ import annotations

from typing import Iterable, Optional


class ReductionError(Exception):
    """Base class for reduction failures."""


class GadgetOverlapError(ReductionError):
    """Raised when a stamped gadget footprint collides with existing men."""

    def __init__(self, gadget: str, cells: Iterable[tuple[int, int]]):
        self.gadget = gadget
        self.cells = sorted(cells)
        shown = ", ".join(f"{x},{y}" for x, y in self.cells[:6])
        super().__init__(f"{gadget} overlaps existing men at {shown}")


class SpacingInfeasibleError(ReductionError):
    """Raised when two interaction gadgets on one row end up closer than four columns."""

    def __init__(self, row: int, columns: tuple[int, int]):
        self.row = row
        self.columns = columns
        super().__init__(
            f"interaction gadgets at columns {columns[0]} and {columns[1]} of row {row} "
            f"are closer than 4 apart"
        )


class ContractFormatError(ReductionError):
    """Raised when a gadget contract document is malformed."""


class ManifestFormatError(ReductionError):
    """Raised when a layout manifest cannot be parsed or disagrees with its own formula."""

    def __init__(self, line: Optional[int], message: str):
        self.line = line
        self.message = message
        where = f"line {line}" if line is not None else "manifest"
        super().__init__(f"layout manifest ({where}): {message}")


class WitnessError(ReductionError):
    """Raised when a witness translation cannot be carried out."""


class UnsatisfiedClauseError(WitnessError):
    """The assignment handed to assignment_to_sequence leaves a clause false."""

    def __init__(self, clause_index: int):
        self.clause_index = clause_index
        super().__init__(f"assignment does not satisfy clause {clause_index}")


class ManifestInconsistencyError(WitnessError):
    """
    A winning sequence that does not use exactly one line of some group.

    The fan-in/fan-out contracts rule this out, so it signals a gadget bug.
    """

    def __init__(self, group: str, index: int, detail: str):
        self.group = group
        self.index = index
        super().__init__(f"{group} {index}: {detail}")

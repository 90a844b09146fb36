"""
Endgame SAT — Formula Primitives

Literal, Clause, CnfFormula and Assignment.

INVARIANT: a Clause always holds exactly three literal slots. Narrower
clauses are normalized by Clause.of() before construction; the slot order
is significant downstream (slot j becomes the j-th vertical line of the
clause gadget).
"""
from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from endgame_sat.errors import ClauseWidthError, EmptyClauseError

CLAUSE_SLOTS = 3


class Literal(BaseModel):
    """A variable (0-based) or its negation."""

    model_config = ConfigDict(frozen=True)

    variable: int = Field(..., ge=0)
    negated: bool = False

    @classmethod
    def from_dimacs(cls, value: int) -> "Literal":
        """Build from a signed, 1-based DIMACS literal."""
        if value == 0:
            raise ValueError("DIMACS literal 0 is the clause terminator")
        return cls(variable=abs(value) - 1, negated=value < 0)

    def to_dimacs(self) -> int:
        """Signed, 1-based DIMACS literal."""
        number = self.variable + 1
        return -number if self.negated else number

    def negate(self) -> "Literal":
        return Literal(variable=self.variable, negated=not self.negated)

    def is_true_under(self, values: Sequence[bool]) -> bool:
        return values[self.variable] != self.negated

    def __str__(self) -> str:
        return f"{'~' if self.negated else ''}x{self.variable}"


class Clause(BaseModel):
    """Disjunction of exactly three literal slots."""

    model_config = ConfigDict(frozen=True)

    literals: tuple[Literal, Literal, Literal]

    @classmethod
    def of(cls, literals: Iterable[Literal], *, line: int | None = None) -> "Clause":
        """
        Normalize 1-3 distinct literals into three slots.

        Duplicates are dropped (first occurrence wins) and the distinct
        literals are repeated cyclically until three slots are filled,
        so (a, b) becomes (a, b, a) and (a) becomes (a, a, a).

        Raises:
            EmptyClauseError: no literals at all
            ClauseWidthError: more than three distinct literals
        """
        distinct: list[Literal] = []
        for literal in literals:
            if literal not in distinct:
                distinct.append(literal)
        if not distinct:
            raise EmptyClauseError(line)
        if len(distinct) > CLAUSE_SLOTS:
            raise ClauseWidthError(line, len(distinct))
        slots = [distinct[i % len(distinct)] for i in range(CLAUSE_SLOTS)]
        return cls(literals=tuple(slots))

    @classmethod
    def from_dimacs(cls, values: Iterable[int], *, line: int | None = None) -> "Clause":
        return cls.of((Literal.from_dimacs(v) for v in values), line=line)

    @property
    def variables(self) -> tuple[int, int, int]:
        return tuple(lit.variable for lit in self.literals)  # type: ignore[return-value]

    def distinct_literals(self) -> list[Literal]:
        seen: list[Literal] = []
        for literal in self.literals:
            if literal not in seen:
                seen.append(literal)
        return seen

    def is_satisfied_by(self, values: Sequence[bool]) -> bool:
        return any(lit.is_true_under(values) for lit in self.literals)

    def is_tautology(self) -> bool:
        return any(lit.negate() in self.literals for lit in self.literals)

    def permuted(self, order: Sequence[int]) -> "Clause":
        return Clause(literals=tuple(self.literals[i] for i in order))

    def __str__(self) -> str:
        return "(" + " | ".join(str(lit) for lit in self.literals) + ")"


class CnfFormula(BaseModel):
    """Ordered conjunction of normalized clauses over num_vars variables."""

    model_config = ConfigDict(frozen=True)

    num_vars: int = Field(..., ge=0)
    clauses: tuple[Clause, ...] = ()

    @model_validator(mode="after")
    def validate_variables(self) -> "CnfFormula":
        for index, clause in enumerate(self.clauses):
            for literal in clause.literals:
                if literal.variable >= self.num_vars:
                    raise ValueError(
                        f"clause {index} uses x{literal.variable} "
                        f"but the formula declares {self.num_vars} variables"
                    )
        return self

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def with_clauses(self, clauses: Iterable[Clause]) -> "CnfFormula":
        return CnfFormula(num_vars=self.num_vars, clauses=tuple(clauses))

    def __str__(self) -> str:
        if not self.clauses:
            return "TRUE"
        return " & ".join(str(c) for c in self.clauses)


class Assignment(BaseModel):
    """Total truth assignment, one boolean per variable."""

    model_config = ConfigDict(frozen=True)

    values: tuple[bool, ...] = ()

    @classmethod
    def from_bits(cls, bits: int, num_vars: int) -> "Assignment":
        """Decode an integer with variable 0 as the most significant bit."""
        return cls(
            values=tuple(bool(bits >> (num_vars - 1 - i) & 1) for i in range(num_vars))
        )

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v: Iterable[bool]) -> tuple[bool, ...]:
        return tuple(bool(x) for x in v)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, variable: int) -> bool:
        return self.values[variable]

    def to_text(self) -> str:
        """One line of DIMACS-style signed literals, e.g. ``1 -2 -3``."""
        return " ".join(
            str(i + 1) if value else str(-(i + 1)) for i, value in enumerate(self.values)
        )

    @classmethod
    def parse(cls, text: str) -> "Assignment":
        """Inverse of to_text(); literals may appear in any order."""
        tokens = [int(t) for t in text.split() if t != "0"]
        if not tokens:
            return cls(values=())
        num_vars = max(abs(t) for t in tokens)
        values: list[bool | None] = [None] * num_vars
        for token in tokens:
            values[abs(token) - 1] = token > 0
        missing = [i + 1 for i, v in enumerate(values) if v is None]
        if missing:
            raise ValueError(f"assignment is not total; missing variables {missing}")
        return cls(values=tuple(bool(v) for v in values))

"""
Endgame CLI — Run Configuration

Settings shared by every subcommand. A YAML file given with --config
supplies defaults; explicit command-line flags override it.

    node_limit: 2000000
    orthogonal_only: false
    seed: 1
    count: 100
    vars: "3..6"
    clauses: "1..8"
"""
from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from endgame_checkers import DEFAULT_ORACLE_CAP
from endgame_phutball import DEFAULT_NODE_LIMIT


class RenderFormat(str, Enum):
    ASCII = "ascii"
    SVG = "svg"


def parse_range(text: str) -> tuple[int, int]:
    """'LO..HI' (inclusive) or a single integer."""
    text = str(text).strip()
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ValueError(f"expected LO..HI, got {text!r}") from None
    if bounds[0] < 0 or bounds[0] > bounds[1]:
        raise ValueError(f"empty or negative range {text!r}")
    return bounds


class RunConfig(BaseModel):
    """
    Everything that determines a run's output. Two runs with equal
    RunConfig and equal inputs print identical bytes.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    node_limit: int = Field(DEFAULT_NODE_LIMIT, ge=1)
    orthogonal_only: bool = False

    # random suites
    seed: int = 1
    count: int = Field(100, ge=0)
    vars_range: tuple[int, int] = Field((3, 6), alias="vars")
    clauses_range: tuple[int, int] = Field((1, 8), alias="clauses")

    # checkers suite
    board_sizes: tuple[int, ...] = (4, 6, 8)
    max_opponents: int = Field(6, ge=1)
    oracle_cap: int = Field(DEFAULT_ORACLE_CAP, ge=1)

    render_format: RenderFormat = Field(RenderFormat.ASCII, alias="format")
    out: Optional[Path] = None
    log_level: str = "WARNING"

    @field_validator("vars_range", "clauses_range", mode="before")
    @classmethod
    def coerce_range(cls, v: Any) -> Any:
        if isinstance(v, (str, int)):
            return parse_range(str(v))
        return v

    @field_validator("board_sizes")
    @classmethod
    def even_sizes(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v or any(size < 4 or size % 2 for size in v):
            raise ValueError("board sizes must be even numbers >= 4")
        return v

    @field_validator("log_level")
    @classmethod
    def upper_level(cls, v: str) -> str:
        return v.upper()

    @model_validator(mode="after")
    def clauses_need_variables(self) -> "RunConfig":
        if self.clauses_range[1] > 0 and self.vars_range[0] < 1:
            raise ValueError("formulas with clauses need at least one variable")
        return self

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        path = Path(path)
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        return cls.model_validate(data)

    def merged(self, **overrides: Any) -> "RunConfig":
        """A copy with every override that is not None applied and re-validated."""
        data = self.model_dump(by_alias=True)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return type(self).model_validate(data)

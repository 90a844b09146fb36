"""
Endgame Reduction — Gadget Contract Models

Pure models of the traversal contracts shipped as
gadget_contracts_v1.yaml next to this module. Loading the YAML is the
job of endgame_reduction.factory.
"""
from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from endgame_reduction.templates import GadgetKind

CONTRACTS_RESOURCE = "gadget_contracts_v1.yaml"


class Expectation(str, Enum):
    PASS = "PASS"
    BLOCKED = "BLOCKED"


class Traversal(BaseModel):
    """A port-to-port traversal replayed before a case is checked."""

    model_config = ConfigDict(frozen=True)

    start: str
    target: str


class ContractCase(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    start: str
    target: str
    expect: Expectation
    after: tuple[Traversal, ...] = ()


class GadgetContract(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: GadgetKind
    description: Optional[str] = None
    cases: tuple[ContractCase, ...] = Field(..., min_length=1)


__all__ = [
    "CONTRACTS_RESOURCE",
    "Expectation",
    "Traversal",
    "ContractCase",
    "GadgetContract",
]

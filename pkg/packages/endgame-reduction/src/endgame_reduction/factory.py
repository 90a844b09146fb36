"""
Endgame Reduction — Factory (The IO Boundary)

Bridge between the YAML contract documents and the pure contract models.

ARCHITECTURAL RULE:
- This module imports from `endgame_reduction.io` (Dirty)
- This module imports from `endgame_reduction.contracts` (Pure)
- It constructs pure objects from dirty inputs.

Usage:
    from endgame_reduction.factory import load_gadget_contracts

    contracts = load_gadget_contracts()          # packaged v1 document
    contracts = load_gadget_contracts("my.yaml")  # an override
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

from endgame_reduction.contracts import CONTRACTS_RESOURCE, GadgetContract
from endgame_reduction.errors import ContractFormatError
from endgame_reduction.io.loaders import load_packaged_yaml, load_yaml_file
from endgame_reduction.templates import GadgetKind

logger = logging.getLogger(__name__)

SUPPORTED_VERSION = 1


def load_gadget_contracts(path: Optional[str | Path] = None) -> dict[GadgetKind, GadgetContract]:
    """
    Load gadget contracts keyed by kind.

    Args:
        path: YAML document to read; the packaged document when omitted

    Raises:
        ContractFormatError: wrong version, unknown kind or malformed case
    """
    if path is None:
        raw = load_packaged_yaml("endgame_reduction.contracts", CONTRACTS_RESOURCE)
        source = CONTRACTS_RESOURCE
    else:
        raw = load_yaml_file(path)
        source = str(path)
    contracts = build_contracts(raw, source=source)
    logger.debug("loaded %d gadget contracts from %s", len(contracts), source)
    return contracts


def build_contracts(raw: Any, *, source: str = "<memory>") -> dict[GadgetKind, GadgetContract]:
    """Construct contract models from an already-parsed document."""
    if not isinstance(raw, dict):
        raise ContractFormatError(f"{source}: expected a mapping at top level")
    if raw.get("version") != SUPPORTED_VERSION:
        raise ContractFormatError(f"{source}: unsupported contract version {raw.get('version')!r}")
    entries = raw.get("contracts")
    if not isinstance(entries, dict) or not entries:
        raise ContractFormatError(f"{source}: 'contracts' must be a non-empty mapping")

    contracts: dict[GadgetKind, GadgetContract] = {}
    for name, body in entries.items():
        try:
            kind = GadgetKind(name)
        except ValueError:
            raise ContractFormatError(f"{source}: unknown gadget kind {name!r}") from None
        body = body or {}
        try:
            contracts[kind] = GadgetContract(
                kind=kind,
                description=body.get("description"),
                cases=tuple(_case(c) for c in body.get("cases", [])),
            )
        except (ValidationError, AttributeError, IndexError, TypeError, ValueError) as exc:
            raise ContractFormatError(f"{source}: contract {name}: {exc}") from exc
    return contracts


def _case(raw: dict) -> dict:
    after = raw.get("after") or []
    return {
        "name": raw.get("name", ""),
        "start": raw.get("start"),
        "target": raw.get("target"),
        "expect": raw.get("expect"),
        "after": tuple({"start": pair[0], "target": pair[1]} for pair in after),
    }

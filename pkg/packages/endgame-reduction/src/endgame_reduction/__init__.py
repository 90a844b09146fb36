"""
Endgame Reduction — 3-SAT to Phutball Compiler

Package Structure:
- templates.py    - GadgetKind, GadgetTemplate and the template builders
- stamp.py        - stamp() with footprint collision checks
- contracts/      - contract models + gadget_contracts_v1.yaml
- io/             - YAML loaders (dirty layer)
- factory.py      - load_gadget_contracts() (IO boundary)
- gadget_check.py - check_gadget() harness
- layout.py       - plan_layout() and LayoutPlan
- compiler.py     - compile_formula() and build_board()
- manifest.py     - write_manifest() / parse_manifest()
- witness.py      - assignment <-> sequence translation

Design Principles:
1. layout.py and compiler.py never touch files
2. The compiler is deterministic in its input formula
3. Gadget behaviour is checked by exhaustive enumeration, not assumed
"""
from __future__ import annotations

from endgame_reduction.errors import (
    ReductionError,
    GadgetOverlapError,
    SpacingInfeasibleError,
    ContractFormatError,
    ManifestFormatError,
    WitnessError,
    UnsatisfiedClauseError,
    ManifestInconsistencyError,
)
from endgame_reduction.templates import (
    GadgetKind,
    Port,
    Footprint,
    GadgetTemplate,
    crossing_template,
    interaction_template,
    fan_out3_template,
    fan_in3_template,
    fan_out2_template,
    fan_in2_template,
    goal_path_template,
    build_template,
    default_templates,
)
from endgame_reduction.stamp import stamp
from endgame_reduction.contracts import Expectation, Traversal, ContractCase, GadgetContract
from endgame_reduction.factory import load_gadget_contracts, build_contracts
from endgame_reduction.gadget_check import CaseResult, GadgetReport, check_gadget, check_all_gadgets
from endgame_reduction.layout import (
    ROW_CONSTANT,
    COLUMN_CONSTANT,
    VariableLines,
    ClauseLines,
    CrossingEntry,
    GadgetPlacement,
    LayoutPlan,
    plan_layout,
    dimension_bounds,
    dimensions,
)
from endgame_reduction.compiler import (
    CompiledInstance,
    CompileReport,
    build_board,
    compile_formula,
    compile_report,
)
from endgame_reduction.manifest import (
    write_manifest,
    parse_manifest,
    formula_from_plan,
    instance_from_manifest,
)
from endgame_reduction.witness import (
    PathChoice,
    route_legs,
    trace_route,
    sequence_from_path_choice,
    assignment_to_sequence,
    path_choice_from_sequence,
    sequence_to_assignment,
    simplify_sequence,
)

__all__ = [
    # Errors
    "ReductionError",
    "GadgetOverlapError",
    "SpacingInfeasibleError",
    "ContractFormatError",
    "ManifestFormatError",
    "WitnessError",
    "UnsatisfiedClauseError",
    "ManifestInconsistencyError",
    # Templates
    "GadgetKind",
    "Port",
    "Footprint",
    "GadgetTemplate",
    "crossing_template",
    "interaction_template",
    "fan_out3_template",
    "fan_in3_template",
    "fan_out2_template",
    "fan_in2_template",
    "goal_path_template",
    "build_template",
    "default_templates",
    "stamp",
    # Contracts
    "Expectation",
    "Traversal",
    "ContractCase",
    "GadgetContract",
    "load_gadget_contracts",
    "build_contracts",
    "CaseResult",
    "GadgetReport",
    "check_gadget",
    "check_all_gadgets",
    # Layout & compiler
    "ROW_CONSTANT",
    "COLUMN_CONSTANT",
    "VariableLines",
    "ClauseLines",
    "CrossingEntry",
    "GadgetPlacement",
    "LayoutPlan",
    "plan_layout",
    "dimension_bounds",
    "dimensions",
    "CompiledInstance",
    "CompileReport",
    "build_board",
    "compile_formula",
    "compile_report",
    # Manifest
    "write_manifest",
    "parse_manifest",
    "formula_from_plan",
    "instance_from_manifest",
    # Witness
    "PathChoice",
    "route_legs",
    "trace_route",
    "sequence_from_path_choice",
    "assignment_to_sequence",
    "path_choice_from_sequence",
    "sequence_to_assignment",
    "simplify_sequence",
]

__version__ = "1.0.0"

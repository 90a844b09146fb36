"""
Endgame CLI — Command-Line Surface

The only package that imports every other endgame package. Library code
stays free of argument parsing, logging setup and exit codes.

Package Structure:
- main.py     - build_parser(), main()
- commands.py - one cmd_* per subcommand, ExitCode
- harness.py  - seeded round-trip and checkers experiments
- config.py   - RunConfig (YAML + flag overrides)
"""
from __future__ import annotations

from endgame_cli.config import RenderFormat, RunConfig, parse_range
from endgame_cli.commands import ExitCode
from endgame_cli.harness import (
    RoundTripRow,
    RoundTripReport,
    CheckersRow,
    CheckersReport,
    run_round_trip,
    render_round_trip,
    run_checkers_suite,
    render_checkers_suite,
)
from endgame_cli.main import build_parser, main

__all__ = [
    # Config
    "RenderFormat",
    "RunConfig",
    "parse_range",
    # Commands
    "ExitCode",
    "build_parser",
    "main",
    # Harness
    "RoundTripRow",
    "RoundTripReport",
    "CheckersRow",
    "CheckersReport",
    "run_round_trip",
    "render_round_trip",
    "run_checkers_suite",
    "render_checkers_suite",
]

__version__ = "1.0.0"

"""
Endgame CLI — Entry Point

    endgame [--config run.yaml] [--log-level LEVEL] <command> [options]

Shared options may be given before or after the command.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, TextIO

import yaml

from endgame_checkers import CheckersError, Color, OracleExplosionError
from endgame_cli import commands
from endgame_cli.commands import ExitCode
from endgame_cli.config import RenderFormat, RunConfig
from endgame_phutball import EnumerationLimitError, PhutballError
from endgame_reduction import ReductionError
from endgame_sat import OracleLimitError, SatError

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, RunConfig, TextIO], int]

RESOURCE_ERRORS = (OracleLimitError, EnumerationLimitError, OracleExplosionError)
INPUT_ERRORS = (SatError, PhutballError, ReductionError, CheckersError, OSError, ValueError, yaml.YAMLError)


def _shared_options(default) -> argparse.ArgumentParser:
    # subcommand copies must not overwrite values parsed before the command
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", type=Path, default=default, help="YAML file with RunConfig defaults")
    shared.add_argument("--log-level", default=default, help="logging level for stderr (default WARNING)")
    shared.add_argument("--node-limit", type=int, default=default, help="solver node limit")
    shared.add_argument(
        "--orthogonal-only", action="store_const", const=True, default=default,
        help="restrict the solver to N, E, S, W jumps",
    )
    shared.add_argument("--seed", type=int, default=default)
    shared.add_argument("--count", type=int, default=default)
    shared.add_argument("--vars", default=default, metavar="LO..HI")
    shared.add_argument("--clauses", default=default, metavar="LO..HI")
    shared.add_argument("--max-opponents", type=int, default=default)
    shared.add_argument("--format", choices=[f.value for f in RenderFormat], default=default)
    shared.add_argument("--out", type=Path, default=default, help="write the artefact here instead of stdout")
    return shared


def _square(text: str) -> tuple[int, int]:
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return x, y


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_options(None)
    sub_shared = _shared_options(argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="endgame",
        description="3-SAT to Phutball reduction toolkit and checkers single-move analyzer.",
        parents=[shared],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[sub_shared], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("reduce", commands.cmd_reduce, "compile a DIMACS 3-CNF formula to a Phutball board")
    p.add_argument("formula", type=Path)
    p.add_argument("--manifest", type=Path, default=None, help="layout manifest path (default <out>.layout)")

    p = add("solve", commands.cmd_solve, "search a board for a winning jump sequence")
    p.add_argument("board", type=Path)

    p = add("verify", commands.cmd_verify, "check a jump sequence against a board")
    p.add_argument("board", type=Path)
    p.add_argument("sequence", type=Path)

    p = add("witness", commands.cmd_witness, "translate an assignment or a winning sequence")
    p.add_argument("board", type=Path)
    p.add_argument("manifest", type=Path)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--assignment", type=Path, default=None)
    which.add_argument("--sequence", type=Path, default=None)

    p = add("render", commands.cmd_render, "draw a board as text or SVG")
    p.add_argument("board", type=Path)
    p.add_argument("--sequence", type=Path, default=None, help="overlay a jump sequence")

    p = add("gadget-check", commands.cmd_gadget_check, "check every gadget template against its contract")
    p.add_argument("--contracts", type=Path, default=None, help="contracts YAML (default: shipped)")

    add("roundtrip", commands.cmd_roundtrip, "random 3-SAT vs Phutball agreement experiment")

    p = add("checkers", commands.cmd_checkers, "analyse a checkers position")
    p.add_argument("position", type=Path)
    test = p.add_mutually_exclusive_group()
    test.add_argument("--king-test", type=_square, default=None, metavar="X,Y")
    test.add_argument("--win-test", choices=[c.value for c in Color], default=None)

    add("checkers-suite", commands.cmd_checkers_suite, "jump graph vs brute force on random positions")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    base = RunConfig.load(args.config) if getattr(args, "config", None) else RunConfig()
    return base.merged(
        node_limit=getattr(args, "node_limit", None),
        orthogonal_only=getattr(args, "orthogonal_only", None),
        seed=getattr(args, "seed", None),
        count=getattr(args, "count", None),
        vars=getattr(args, "vars", None),
        clauses=getattr(args, "clauses", None),
        max_opponents=getattr(args, "max_opponents", None),
        format=getattr(args, "format", None),
        out=getattr(args, "out", None),
        log_level=getattr(args, "log_level", None),
    )


def _configure_logging(level_name: str) -> None:
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {level_name!r}")
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None) -> int:
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config = _run_config(args)
        _configure_logging(config.log_level)
        logger.debug("running %s with %s", args.command, config)
        return int(args.handler(args, config, stream))
    except RESOURCE_ERRORS as exc:
        print(f"endgame: resource limit: {exc}", file=sys.stderr)
        return ExitCode.RESOURCE_LIMIT
    except INPUT_ERRORS as exc:
        print(f"endgame: {exc}", file=sys.stderr)
        return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

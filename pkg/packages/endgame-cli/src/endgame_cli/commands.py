"""
Endgame CLI — Subcommands

Each cmd_* reads its inputs, calls into the library packages and writes
a line-oriented report ending in a ``RESULT:`` line. Reports go to the
given stream; artefacts (boards, manifests, sequences, SVG) go to --out
or, without it, to the same stream.

Exit codes:
    0  affirmative (win found, valid winning, satisfied, all agree)
    1  negative (no win, rejected certificate, disagreement)
    2  input error
    3  resource limit
"""
from __future__ import annotations

import argparse
import logging
from enum import IntEnum
from pathlib import Path
from typing import Optional, TextIO

from endgame_checkers import (
    Color,
    analyze,
    can_king,
    describe_move,
    from_diamond,
    has_one_move_win,
    parse_position,
)
from endgame_cli.config import RenderFormat, RunConfig
from endgame_cli.harness import (
    render_checkers_suite,
    render_round_trip,
    run_checkers_suite,
    run_round_trip,
)
from endgame_phutball import (
    SearchOptions,
    VerifyStatus,
    find_winning_sequence,
    parse_board,
    parse_sequence,
    render_board,
    render_sequence,
    render_svg,
    verify_sequence,
)
from endgame_reduction import (
    UnsatisfiedClauseError,
    WitnessError,
    assignment_to_sequence,
    check_all_gadgets,
    compile_formula,
    compile_report,
    instance_from_manifest,
    load_gadget_contracts,
    sequence_to_assignment,
    write_manifest,
)
from endgame_sat import Assignment, evaluate, parse_dimacs

logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = ".layout"


class ExitCode(IntEnum):
    AFFIRMATIVE = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    RESOURCE_LIMIT = 3


def _read(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_artefact(text: str, out: Optional[Path], stream: TextIO) -> None:
    if out is None:
        stream.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info("wrote %s", out)


# =============================================================================
# Phutball and the reduction
# =============================================================================

def cmd_reduce(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    """DIMACS in; board and layout manifest out."""
    formula = parse_dimacs(_read(args.formula))
    instance = compile_formula(formula)
    report = compile_report(instance)

    _write_artefact(render_board(instance.board), config.out, stream)
    manifest = args.manifest
    if manifest is None and config.out is not None:
        manifest = config.out.with_name(config.out.name + MANIFEST_SUFFIX)
    # without any path the manifest follows the board on the stream
    _write_artefact(write_manifest(instance.plan), Path(manifest) if manifest else None, stream)

    stream.write(
        f"RESULT: compiled n={report.num_vars} m={report.num_clauses} "
        f"W={report.width} H={report.height} men={report.men} "
        f"crossings={report.crossings} interactions={report.interactions} "
        f"widened={report.widened_pairs}\n"
    )
    return ExitCode.AFFIRMATIVE


def cmd_solve(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    board = parse_board(_read(args.board))
    options = SearchOptions(node_limit=config.node_limit, orthogonal_only=config.orthogonal_only)
    result = find_winning_sequence(board, options)

    if result.found is not None:
        _write_artefact(render_sequence(result.found) + "\n", config.out, stream)
        stream.write(f"RESULT: win-found jumps={len(result.found)} nodes={result.nodes_expanded}\n")
        return ExitCode.AFFIRMATIVE
    if result.limit_hit:
        stream.write(f"RESULT: limit nodes={result.nodes_expanded}\n")
        return ExitCode.RESOURCE_LIMIT
    stream.write(f"RESULT: no-win nodes={result.nodes_expanded}\n")
    return ExitCode.NEGATIVE


def cmd_verify(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    board = parse_board(_read(args.board))
    sequence = parse_sequence(_read(args.sequence))
    verdict = verify_sequence(board, sequence)
    stream.write(f"RESULT: {verdict.describe()}\n")
    return ExitCode.AFFIRMATIVE if verdict.status is VerifyStatus.VALID_WINNING else ExitCode.NEGATIVE


def cmd_witness(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    """
    Translate a witness across the reduction.

    With --assignment the satisfying assignment becomes a winning jump
    sequence; with --sequence a winning sequence becomes an assignment.
    """
    board = parse_board(_read(args.board))
    instance = instance_from_manifest(board, _read(args.manifest))

    try:
        if args.assignment is not None:
            assignment = Assignment.parse(_read(args.assignment))
            sequence = assignment_to_sequence(instance, assignment)
            _write_artefact(render_sequence(sequence) + "\n", config.out, stream)
            stream.write(f"RESULT: sequence jumps={len(sequence)}\n")
        else:
            sequence = parse_sequence(_read(args.sequence))
            assignment = sequence_to_assignment(instance, sequence)
            _write_artefact(assignment.to_text() + "\n", config.out, stream)
            satisfied = evaluate(instance.formula, assignment)
            stream.write(f"RESULT: assignment satisfied={'yes' if satisfied else 'no'}\n")
            if not satisfied:
                return ExitCode.NEGATIVE
    except UnsatisfiedClauseError as exc:
        stream.write(f"RESULT: unsatisfied clause={exc.clause_index}\n")
        return ExitCode.NEGATIVE
    except WitnessError as exc:
        stream.write(f"RESULT: rejected {exc}\n")
        return ExitCode.NEGATIVE
    return ExitCode.AFFIRMATIVE


def cmd_render(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    board = parse_board(_read(args.board))
    overlay = parse_sequence(_read(args.sequence)) if args.sequence else None
    if config.render_format is RenderFormat.SVG:
        text = render_svg(board, overlay)
    else:
        text = render_board(board)
        if overlay is not None:
            text += render_sequence(overlay) + "\n"
    _write_artefact(text, config.out, stream)
    return ExitCode.AFFIRMATIVE


def cmd_gadget_check(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    contracts = load_gadget_contracts(args.contracts)
    reports = check_all_gadgets(contracts)
    for report in reports:
        stream.write(report.describe() + "\n")
    passed = sum(report.ok for report in reports)
    stream.write(f"RESULT: gadgets={len(reports)} passed={passed} failed={len(reports) - passed}\n")
    return ExitCode.AFFIRMATIVE if passed == len(reports) else ExitCode.NEGATIVE


def cmd_roundtrip(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    report = run_round_trip(config)
    stream.write(render_round_trip(report))
    if report.disagreed:
        return ExitCode.NEGATIVE
    if report.limited:
        return ExitCode.RESOURCE_LIMIT
    return ExitCode.AFFIRMATIVE


# =============================================================================
# Checkers
# =============================================================================

def _standard_move(position, origin, landings) -> Optional[str]:
    try:
        from_diamond(position)
    except ValueError:
        return None
    return describe_move(origin, landings, position.width)


def _path_text(origin, landings) -> str:
    return " ".join(f"{x},{y}" for x, y in (origin, *landings))


def cmd_checkers(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    position = parse_position(_read(args.position))

    if args.king_test is not None:
        verdict = can_king(position, args.king_test)
        if not verdict.reachable:
            stream.write("RESULT: can-king no\n")
            return ExitCode.NEGATIVE
        stream.write(f"path: {_path_text(verdict.square, verdict.landings)}\n")
        move = _standard_move(position, verdict.square, verdict.landings)
        if move:
            stream.write(f"move: {move}\n")
        stream.write("RESULT: can-king yes\n")
        return ExitCode.AFFIRMATIVE

    if args.win_test is not None:
        verdict = has_one_move_win(position, Color(args.win_test))
        if not verdict.winning:
            stream.write(f"RESULT: one-move-win {verdict.color.value} no\n")
            return ExitCode.NEGATIVE
        stream.write(f"path: {_path_text(verdict.piece, verdict.landings)}\n")
        move = _standard_move(position, verdict.piece, verdict.landings)
        if move:
            stream.write(f"move: {move}\n")
        stream.write(f"RESULT: one-move-win {verdict.color.value} yes\n")
        return ExitCode.AFFIRMATIVE

    verdict = analyze(position)
    for piece in verdict.pieces:
        kinging = "-" if piece.can_king is None else ("yes" if piece.can_king else "no")
        stream.write(
            f"{piece.square.x},{piece.square.y} {'king' if piece.king else 'man'} "
            f"cells={piece.cells} jumpable={piece.jumpable} covers-all={'yes' if piece.covers_all else 'no'} "
            f"euler={'yes' if piece.euler_path else 'no'} can-king={kinging}\n"
        )
    stream.write(
        f"RESULT: mover={verdict.mover.value} can-king={'yes' if verdict.can_king else 'no'} "
        f"one-move-win={'yes' if verdict.one_move_win.winning else 'no'}\n"
    )
    return ExitCode.AFFIRMATIVE if verdict.one_move_win.winning or verdict.can_king else ExitCode.NEGATIVE


def cmd_checkers_suite(args: argparse.Namespace, config: RunConfig, stream: TextIO) -> int:
    report = run_checkers_suite(config)
    stream.write(render_checkers_suite(report))
    return ExitCode.AFFIRMATIVE if report.agreed == len(report.rows) else ExitCode.NEGATIVE

"""
Endgame Reduction — Stamping

Places gadget templates onto boards. A footprint cell that already holds
a man is a collision unless it is one of the template's declared ports,
where a line and a gadget legitimately meet.
"""
from __future__ import annotations

from endgame_phutball import Board, Coord

from endgame_reduction.errors import GadgetOverlapError
from endgame_reduction.templates import GadgetTemplate


def stamp_cells(
    men: set[Coord],
    template: GadgetTemplate,
    anchor: tuple[int, int],
    width: int,
    height: int,
) -> None:
    """
    Stamp a template into a mutable set of men.

    Raises:
        GadgetOverlapError: footprint leaves the board or collides with men
    """
    ax, ay = anchor
    footprint = [Coord(ax + c.x, ay + c.y) for c in template.footprint.cells()]
    label = f"{template.kind.value}@{ax},{ay}"

    off_board = [c for c in footprint if not (0 <= c.x < width and 0 <= c.y < height)]
    if off_board:
        raise GadgetOverlapError(label, off_board)

    ports = {Coord(ax + p.offset.x, ay + p.offset.y) for p in template.ports}
    collisions = [c for c in footprint if c in men and c not in ports]
    if collisions:
        raise GadgetOverlapError(label, collisions)

    men.update(Coord(ax + c.x, ay + c.y) for c in template.men)


def stamp(board: Board, template: GadgetTemplate, anchor: tuple[int, int]) -> Board:
    """
    Board with the template stamped at anchor.

    Raises:
        GadgetOverlapError: footprint leaves the board, collides with men
            outside the template's ports, or covers the ball
    """
    men = set(board.men)
    stamp_cells(men, template, anchor, board.width, board.height)
    if board.ball in men:
        raise GadgetOverlapError(f"{template.kind.value}@{anchor[0]},{anchor[1]}", [board.ball])
    return board.with_men(add=men - board.men)

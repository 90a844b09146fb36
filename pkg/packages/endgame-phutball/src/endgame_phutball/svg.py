"""
Endgame Phutball — SVG Rendering

Grid of intersections, men as open circles, the ball filled, and an
optional polyline tracing a jump sequence. Output is deterministic text.
"""
from __future__ import annotations

from typing import Optional

from endgame_phutball.board import Board
from endgame_phutball.sequence import JumpSequence

SVG_NS = "http://www.w3.org/2000/svg"


def _demangle(key: str) -> str:
    return key.rstrip("_").replace("_", "-")


def _value(v: object) -> str:
    if isinstance(v, float):
        return f"{v:g}"
    return str(v)


def _tag(name: str, unary: bool = True, **attrs: object) -> str:
    props = " ".join(f'{_demangle(k)}="{_value(v)}"' for k, v in attrs.items())
    return f"<{name} {props}/>" if unary else f"<{name} {props}>"


def render_svg(
    board: Board,
    overlay: Optional[JumpSequence] = None,
    *,
    cell: int = 24,
) -> str:
    """
    Render a board as an SVG document.

    One spare row of margin is kept above the goal line so a landing
    over the line stays visible.
    """
    margin = cell
    width_px = board.width * cell + 2 * margin
    height_px = (board.height + 1) * cell + 2 * margin

    def cx(x: int) -> float:
        return margin + x * cell + cell / 2

    def cy(y: int) -> float:
        return margin + (board.height - y) * cell + cell / 2

    out = [
        _tag(
            "svg",
            unary=False,
            xmlns=SVG_NS,
            width=width_px,
            height=height_px,
            viewBox=f"0 0 {width_px} {height_px}",
        ),
        _tag("rect", x=0, y=0, width=width_px, height=height_px, fill="white"),
        # opponent goal row
        _tag(
            "rect",
            x=margin,
            y=cy(board.height - 1) - cell / 2,
            width=board.width * cell,
            height=cell,
            fill="#f3e6c4",
        ),
    ]

    for x in range(board.width):
        out.append(_tag("line", x1=cx(x), y1=cy(board.height - 1), x2=cx(x), y2=cy(0),
                        stroke="#999", stroke_width=1))
    for y in range(board.height):
        out.append(_tag("line", x1=cx(0), y1=cy(y), x2=cx(board.width - 1), y2=cy(y),
                        stroke="#999", stroke_width=1))

    radius = cell * 0.38
    for man in board.scan_order():
        out.append(_tag("circle", cx=cx(man.x), cy=cy(man.y), r=radius,
                        fill="white", stroke="black", stroke_width=1.5))
    out.append(_tag("circle", cx=cx(board.ball.x), cy=cy(board.ball.y), r=radius, fill="black"))

    if overlay is not None and len(overlay):
        points = [board.ball, *overlay.landings]
        path = " ".join(f"{cx(p.x):g},{cy(p.y):g}" for p in points)
        out.append(_tag("polyline", points=path, fill="none", stroke="#c0392b",
                        stroke_width=2.5, stroke_linejoin="round"))
        final = overlay.landings[-1]
        out.append(_tag("circle", cx=cx(final.x), cy=cy(final.y), r=cell * 0.15, fill="#c0392b"))

    out.append("</svg>")
    return "\n".join(out) + "\n"

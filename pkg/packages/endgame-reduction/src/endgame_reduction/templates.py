"""
Endgame Reduction — Gadget Templates

Small fixed arrangements of men, each with named ports where ball paths
enter or leave. Offsets are relative to an anchor cell; a template is
stamped onto a board by translating every offset by the anchor.

Every port carries the direction pointing OUT of the gadget. A path
enters through a port by travelling against that direction and leaves
through a port by travelling along it.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from endgame_phutball import Coord, Direction


class GadgetKind(str, Enum):
    CROSSING = "Crossing"
    INTERACTION = "Interaction"
    FAN_OUT_3 = "FanOut3"
    FAN_IN_3 = "FanIn3"
    FAN_OUT_2 = "FanOut2"
    FAN_IN_2 = "FanIn2"
    GOAL_PATH = "GoalPath"


class Port(BaseModel):
    """Named entry/exit cell of a gadget."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    offset: Coord
    direction: Direction
    goal: bool = False   # lies on the opponent's goal row when stamped


class Footprint(BaseModel):
    """Inclusive bounding box of a template, in offsets."""

    model_config = ConfigDict(frozen=True)

    min_x: int
    min_y: int
    max_x: int
    max_y: int

    def cells(self) -> list[Coord]:
        return [
            Coord(x, y)
            for y in range(self.min_y, self.max_y + 1)
            for x in range(self.min_x, self.max_x + 1)
        ]

    def contains(self, cell: tuple[int, int]) -> bool:
        x, y = cell
        return self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y

    def on_boundary(self, cell: tuple[int, int]) -> bool:
        x, y = cell
        return self.contains(cell) and (
            x in (self.min_x, self.max_x) or y in (self.min_y, self.max_y)
        )


class GadgetTemplate(BaseModel):
    """
    A gadget: men offsets, ports and a footprint.

    INVARIANTS:
    - every man lies inside the footprint
    - every port lies on the footprint boundary
    - port names are unique
    """

    model_config = ConfigDict(frozen=True)

    kind: GadgetKind
    men: frozenset[Coord]
    ports: tuple[Port, ...]
    footprint: Footprint

    @model_validator(mode="after")
    def validate_shape(self) -> "GadgetTemplate":
        stray = sorted(c for c in self.men if not self.footprint.contains(c))
        if stray:
            raise ValueError(f"{self.kind.value}: men outside footprint {stray}")
        names = [p.name for p in self.ports]
        if len(set(names)) != len(names):
            raise ValueError(f"{self.kind.value}: duplicate port names {names}")
        for port in self.ports:
            if not self.footprint.on_boundary(port.offset):
                raise ValueError(f"{self.kind.value}: port {port.name} is not on the footprint boundary")
        return self

    def port(self, name: str) -> Port:
        for port in self.ports:
            if port.name == name:
                return port
        raise KeyError(f"{self.kind.value} has no port {name!r}")

    @property
    def goal_port(self) -> Optional[Port]:
        return next((p for p in self.ports if p.goal), None)

    def mirror_x(self) -> "GadgetTemplate":
        """Reflection across the anchor's vertical axis."""
        return self._transformed(lambda c: Coord(-c.x, c.y), Direction.mirrored)

    def mirror_y(self) -> "GadgetTemplate":
        """Reflection across the anchor's horizontal axis."""
        return self._transformed(lambda c: Coord(c.x, -c.y), Direction.flipped)

    def _transformed(self, move, turn) -> "GadgetTemplate":
        corners = [
            move(Coord(self.footprint.min_x, self.footprint.min_y)),
            move(Coord(self.footprint.max_x, self.footprint.max_y)),
        ]
        return GadgetTemplate(
            kind=self.kind,
            men=frozenset(move(c) for c in self.men),
            ports=tuple(
                Port(name=p.name, offset=move(p.offset), direction=turn(p.direction), goal=p.goal)
                for p in self.ports
            ),
            footprint=Footprint(
                min_x=min(c.x for c in corners),
                min_y=min(c.y for c in corners),
                max_x=max(c.x for c in corners),
                max_y=max(c.y for c in corners),
            ),
        )


# =============================================================================
# Template Builders
# =============================================================================

_SQUARE = Footprint(min_x=-1, min_y=-1, max_x=1, max_y=1)


def _arm_ports() -> tuple[Port, ...]:
    return (
        Port(name="west", offset=Coord(-1, 0), direction=Direction.W),
        Port(name="east", offset=Coord(1, 0), direction=Direction.E),
        Port(name="south", offset=Coord(0, -1), direction=Direction.S),
        Port(name="north", offset=Coord(0, 1), direction=Direction.N),
    )


def crossing_template() -> GadgetTemplate:
    """
    Two lines passing through each other.

    The shared centre man lets a path cross in either order; a path that
    has crossed leaves a vacant centre, which the other line jumps into
    and straight out of again.
    """
    return GadgetTemplate(
        kind=GadgetKind.CROSSING,
        men=frozenset({Coord(0, 0), Coord(-1, 0), Coord(1, 0), Coord(0, -1), Coord(0, 1)}),
        ports=_arm_ports(),
        footprint=_SQUARE,
    )


def interaction_template() -> GadgetTemplate:
    """
    Single centre man with a vacant ring: whichever line uses it first
    removes the man and the other line is cut.
    """
    return GadgetTemplate(
        kind=GadgetKind.INTERACTION,
        men=frozenset({Coord(0, 0)}),
        ports=_arm_ports(),
        footprint=_SQUARE,
    )


def fan_out3_template(first_gap: int = 3, second_gap: int = 3) -> GadgetTemplate:
    """
    Clause entry row: one input from the west feeding three junctions
    that open onto northward clause lines.

    Junctions sit at 0, first_gap and first_gap + second_gap; the cells
    between junctions hold men.
    """
    if first_gap < 3 or second_gap < 3:
        raise ValueError("fan gaps must be at least 3")
    junctions = (0, first_gap, first_gap + second_gap)
    men = frozenset(
        Coord(x, 0)
        for x in range(junctions[-1] + 1)
        if x not in junctions
    )
    ports = [Port(name="in", offset=Coord(0, 0), direction=Direction.W)]
    ports += [
        Port(name=f"out{j}", offset=Coord(x, 0), direction=Direction.N)
        for j, x in enumerate(junctions)
    ]
    return GadgetTemplate(
        kind=GadgetKind.FAN_OUT_3,
        men=men,
        ports=tuple(ports),
        footprint=Footprint(min_x=0, min_y=0, max_x=junctions[-1], max_y=0),
    )


def fan_in3_template(first_gap: int = 3, second_gap: int = 3) -> GadgetTemplate:
    """Clause exit row: three southward-arriving lines merging into one eastward exit."""
    if first_gap < 3 or second_gap < 3:
        raise ValueError("fan gaps must be at least 3")
    junctions = (0, first_gap, first_gap + second_gap)
    men = frozenset(
        Coord(x, 0)
        for x in range(junctions[-1] + 1)
        if x not in junctions
    )
    ports = [
        Port(name=f"in{j}", offset=Coord(x, 0), direction=Direction.S)
        for j, x in enumerate(junctions)
    ]
    ports.append(Port(name="out", offset=Coord(junctions[-1], 0), direction=Direction.E))
    return GadgetTemplate(
        kind=GadgetKind.FAN_IN_3,
        men=men,
        ports=tuple(ports),
        footprint=Footprint(min_x=0, min_y=0, max_x=junctions[-1], max_y=0),
    )


def fan_out2_template() -> GadgetTemplate:
    """
    Variable entry: a path arriving from the north chooses the upper
    (true) row or drops to the lower (false) row, both leading east.
    """
    return GadgetTemplate(
        kind=GadgetKind.FAN_OUT_2,
        men=frozenset({Coord(0, -1), Coord(0, -2)}),
        ports=(
            Port(name="in", offset=Coord(0, 0), direction=Direction.N),
            Port(name="upper", offset=Coord(0, 0), direction=Direction.E),
            Port(name="lower", offset=Coord(0, -3), direction=Direction.E),
        ),
        footprint=Footprint(min_x=0, min_y=-3, max_x=0, max_y=0),
    )


def fan_in2_template() -> GadgetTemplate:
    """Variable exit: upper and lower rows arriving from the west, one exit south."""
    return GadgetTemplate(
        kind=GadgetKind.FAN_IN_2,
        men=frozenset({Coord(0, -1), Coord(0, -2)}),
        ports=(
            Port(name="upper", offset=Coord(0, 0), direction=Direction.W),
            Port(name="lower", offset=Coord(0, -3), direction=Direction.W),
            Port(name="out", offset=Coord(0, -3), direction=Direction.S),
        ),
        footprint=Footprint(min_x=0, min_y=-3, max_x=0, max_y=0),
    )


def goal_path_template() -> GadgetTemplate:
    """Two men below the goal row; a path arriving from the south jumps them and wins."""
    return GadgetTemplate(
        kind=GadgetKind.GOAL_PATH,
        men=frozenset({Coord(0, 0), Coord(0, 1)}),
        ports=(
            Port(name="in", offset=Coord(0, -1), direction=Direction.S),
            Port(name="goal", offset=Coord(0, 2), direction=Direction.N, goal=True),
        ),
        footprint=Footprint(min_x=0, min_y=-1, max_x=0, max_y=2),
    )


@lru_cache(maxsize=None)
def build_template(
    kind: GadgetKind,
    gaps: Optional[tuple[int, int]] = None,
    *,
    mirror_x: bool = False,
    mirror_y: bool = False,
) -> GadgetTemplate:
    """Template for a kind, with fan gaps and reflections applied."""
    if kind is GadgetKind.FAN_OUT_3:
        template = fan_out3_template(*(gaps or (3, 3)))
    elif kind is GadgetKind.FAN_IN_3:
        template = fan_in3_template(*(gaps or (3, 3)))
    else:
        template = _FIXED_BUILDERS[kind]()
    if mirror_x:
        template = template.mirror_x()
    if mirror_y:
        template = template.mirror_y()
    return template


_FIXED_BUILDERS = {
    GadgetKind.CROSSING: crossing_template,
    GadgetKind.INTERACTION: interaction_template,
    GadgetKind.FAN_OUT_2: fan_out2_template,
    GadgetKind.FAN_IN_2: fan_in2_template,
    GadgetKind.GOAL_PATH: goal_path_template,
}


def default_templates() -> list[tuple[str, GadgetTemplate]]:
    """Every template variant the compiler stamps, labelled for reports."""
    return [
        ("Crossing", crossing_template()),
        ("Interaction", interaction_template()),
        ("FanOut3", fan_out3_template()),
        ("FanOut3 wide", fan_out3_template(4, 3)),
        ("FanOut3 south", fan_out3_template().mirror_y()),
        ("FanIn3", fan_in3_template()),
        ("FanIn3 wide", fan_in3_template(3, 4)),
        ("FanIn3 south", fan_in3_template().mirror_y()),
        ("FanOut2", fan_out2_template()),
        ("FanOut2 west", fan_out2_template().mirror_x()),
        ("FanIn2", fan_in2_template()),
        ("FanIn2 west", fan_in2_template().mirror_x()),
        ("GoalPath", goal_path_template()),
    ]

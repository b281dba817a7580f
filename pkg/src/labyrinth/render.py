"""Terminal rendering of mazes: one cell is two glyph columns wide.

Layout is exactly (2*width + 1) columns by (height + 2) rows: a top border
row, one row per cell row, and a bottom border row. Vertical walls occupy
the odd columns; internal horizontal walls are drawn as a low block in the
cell's content column. The exit opening shows as a gap in the border.
"""

from __future__ import annotations

from .mazegen import Maze
from .model import Direction, Position

_H_WALL = "▁"  # lower one-eighth block
_V_WALL = "│"  # box-drawing vertical
_FOG = "░"  # light shade


def render_text(
    m: Maze,
    hero: Position | None = None,
    monster: Position | None = None,
    fog_radius: float | None = None,
) -> str:
    """Draw the maze; H hero, M monster, * when co-located, fog as shade."""
    for actor in (hero, monster):
        if actor is not None and not m.in_bounds(actor):
            raise ValueError(f"actor {actor} outside {m.width}x{m.height} grid")
    if fog_radius is not None and hero is None:
        raise ValueError("fog requires a hero to center the searchlight on")

    fog_sq = None if fog_radius is None else fog_radius * fog_radius
    rows = []

    top = [" "]
    for col in range(m.width):
        top.append(_H_WALL * 2 if m.wall(Position(col, 0), Direction.NORTH) else "  ")
    rows.append("".join(top))

    for row in range(m.height):
        line = []
        for col in range(m.width):
            pos = Position(col, row)
            line.append(_V_WALL if m.wall(pos, Direction.WEST) else " ")
            line.append(_cell_glyph(m, pos, hero, monster, fog_sq))
        edge = Position(m.width - 1, row)
        line.append(_V_WALL if m.wall(edge, Direction.EAST) else " ")
        rows.append("".join(line))

    bottom = [" "]
    for col in range(m.width):
        bottom.append(_H_WALL * 2 if m.wall(Position(col, m.height - 1), Direction.SOUTH) else "  ")
    rows.append("".join(bottom))

    return "\n".join(rows) + "\n"


def _cell_glyph(m, pos, hero, monster, fog_sq) -> str:
    fogged = fog_sq is not None and pos.distance_sq(hero) > fog_sq
    if hero == pos and monster == pos:
        return "*"
    if hero == pos:
        return "H"
    if monster == pos and not fogged:
        return "M"
    if fogged:
        return _FOG
    # internal horizontal walls live in the content column; the bottom
    # perimeter is drawn by the border row instead
    if pos.row < m.height - 1 and m.wall(pos, Direction.SOUTH):
        return _H_WALL
    return " "

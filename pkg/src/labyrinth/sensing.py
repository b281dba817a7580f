"""Torch visibility, hearing, and capture checks behind the difficulty settings.

Light is a pure Euclidean disc: walls do not occlude it, and all boundary
comparisons are inclusive so a zero radius still lights the hero's own cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Position


@dataclass(frozen=True)
class DifficultyPolicy:
    """Knobs for one difficulty setting.

    monster_step_period is in ticks per monster move, so a smaller period
    means a faster monster.
    """

    name: str
    searchlight_radius: float
    monster_step_period: int
    hearing_radius: float


# Easiest to hardest; searchlight and period must strictly decrease along it.
DIFFICULTY_ORDER = ("super_easy", "easy", "medium", "difficult")

DEFAULT_DIFFICULTIES = {
    "super_easy": DifficultyPolicy("super_easy", 8.0, 6, 12.0),
    "easy": DifficultyPolicy("easy", 6.0, 5, 10.0),
    "medium": DifficultyPolicy("medium", 4.0, 3, 8.0),
    "difficult": DifficultyPolicy("difficult", 2.5, 2, 6.0),
}


def visible_cells(width: int, height: int, hero: Position, radius: float) -> set[Position]:
    """All in-bounds cells within Euclidean distance radius of the hero.

    Center-to-center distance, inclusive boundary. Always contains the hero.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    if not (0 <= hero.col < width and 0 <= hero.row < height):
        raise ValueError(f"hero {hero} outside {width}x{height} grid")
    reach = math.floor(radius)
    r_sq = radius * radius
    out = set()
    for row in range(max(0, hero.row - reach), min(height, hero.row + reach + 1)):
        dr = row - hero.row
        for col in range(max(0, hero.col - reach), min(width, hero.col + reach + 1)):
            dc = col - hero.col
            if dc * dc + dr * dr <= r_sq:
                out.add(Position(col, row))
    return out


def hearing_check(hero: Position, monster: Position, hearing_radius: float) -> bool:
    """True iff the monster is within Euclidean hearing range (inclusive)."""
    if hearing_radius < 0:
        raise ValueError(f"hearing_radius must be >= 0, got {hearing_radius}")
    return hero.distance_sq(monster) <= hearing_radius * hearing_radius


def caught_check(
    hero_prev: Position,
    hero_now: Position,
    monster_prev: Position,
    monster_now: Position,
) -> bool:
    """Capture on co-location, or on a pass-through swap within one tick."""
    if hero_now == monster_now:
        return True
    return hero_now == monster_prev and monster_now == hero_prev

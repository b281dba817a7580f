"""Pluggable monster decision policies and the walk-cycle sprite selector.

All five policies are total and deterministic: whenever more than one open
passage qualifies, the fixed N,E,S,W order decides, and only random_walk ever
consumes an RNG draw.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .mazegen import Maze, distance_map
from .model import Direction, Position, Rng

BRAIN_KINDS = ("random_walk", "wall_follower", "greedy_chase", "bfs_chase", "explorer")


@dataclass(frozen=True)
class Observation:
    """What a brain may look at: full topology plus both actor positions."""

    maze: Maze
    monster: Position
    hero: Position
    tick: int


@dataclass
class Brain:
    """Decision policy plus its private memory.

    visited_counts only ever grows: choose_direction increments the count of
    each chosen destination and never decrements.
    """

    kind: str
    rng: Rng = field(default_factory=Rng)
    last_direction: Direction | None = None
    visited_counts: dict[Position, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in BRAIN_KINDS:
            raise ValueError(f"unknown brain kind {self.kind!r}")

    def choose_direction(self, obs: Observation) -> Direction:
        """Pick an open passage, update memory, and return the move."""
        options = obs.maze.open_directions(obs.monster)
        if not options:
            raise RuntimeError(f"monster at {obs.monster} has no open passage")
        d = _POLICIES[self.kind](self, obs, options)
        dest = obs.monster.step(d)
        self.visited_counts[dest] = self.visited_counts.get(dest, 0) + 1
        self.last_direction = d
        return d


def _random_walk(brain: Brain, obs: Observation, options: list[Direction]) -> Direction:
    # Never double back unless the dead end forces it.
    if brain.last_direction is not None and len(options) > 1:
        back = brain.last_direction.opposite
        options = [d for d in options if d is not back]
    brain.rng, idx = brain.rng.below(len(options))
    return options[idx]


def _wall_follower(brain: Brain, obs: Observation, options: list[Direction]) -> Direction:
    # Left-hand rule; before the first move the monster is treated as facing north.
    facing = brain.last_direction or Direction.NORTH
    for d in (facing.left, facing, facing.right, facing.opposite):
        if d in options:
            return d
    return options[0]  # unreachable in a connected maze; options is non-empty


def _greedy_chase(brain: Brain, obs: Observation, options: list[Direction]) -> Direction:
    return min(options, key=lambda d: obs.monster.step(d).manhattan(obs.hero))


def _bfs_chase(brain: Brain, obs: Observation, options: list[Direction]) -> Direction:
    # First step of a shortest open-passage path; N,E,S,W breaks equal-length ties.
    dist = distance_map(obs.maze, obs.hero)
    return min(options, key=lambda d: dist[obs.maze.index(obs.monster.step(d))])


def _explorer(brain: Brain, obs: Observation, options: list[Direction]) -> Direction:
    # Least-visited destination wins; the hero is never consulted.
    return min(options, key=lambda d: brain.visited_counts.get(obs.monster.step(d), 0))


_POLICIES = {
    "random_walk": _random_walk,
    "wall_follower": _wall_follower,
    "greedy_chase": _greedy_chase,
    "bfs_chase": _bfs_chase,
    "explorer": _explorer,
}


def monster_sprite_key(facing: Direction, tick: int) -> str:
    """Resource key for the two-frame walk cycle, e.g. "monster.e.0"."""
    return f"monster.{facing.value.lower()}.{tick % 2}"


def shortest_path_len(m: Maze, a: Position, b: Position) -> int:
    """Length of the open-passage path from a to b (unique in a perfect maze)."""
    if not m.in_bounds(a) or not m.in_bounds(b):
        raise ValueError("both endpoints must be inside the grid")
    return distance_map(m, a)[m.index(b)]

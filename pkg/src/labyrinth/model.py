"""Core domain values: directions, grid positions, game events, and the seeded RNG.

Everything downstream (maze carving, monster brains, the session state machine)
draws randomness exclusively through the SplitMix64 stream defined here, so a
64-bit seed pins every observable behaviour bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

MASK64 = 0xFFFFFFFFFFFFFFFF

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class Direction(Enum):
    NORTH = "N"
    EAST = "E"
    SOUTH = "S"
    WEST = "W"

    @property
    def delta(self) -> tuple[int, int]:
        """(dcol, drow) unit offset; rows grow southward."""
        return _DELTAS[self]

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITES[self]

    @property
    def left(self) -> "Direction":
        """90 degrees counter-clockwise (viewer coordinates)."""
        return _LEFT[self]

    @property
    def right(self) -> "Direction":
        return _LEFT[self].opposite

    @property
    def wall_bit(self) -> int:
        """Bit used in per-cell wall masks and the wire wallmask: N=1 E=2 S=4 W=8."""
        return _WALL_BITS[self]


# Tie-break order used by maze carving and every brain policy.
DIRECTIONS = (Direction.NORTH, Direction.EAST, Direction.SOUTH, Direction.WEST)

_DELTAS = {
    Direction.NORTH: (0, -1),
    Direction.EAST: (1, 0),
    Direction.SOUTH: (0, 1),
    Direction.WEST: (-1, 0),
}
_OPPOSITES = {
    Direction.NORTH: Direction.SOUTH,
    Direction.SOUTH: Direction.NORTH,
    Direction.EAST: Direction.WEST,
    Direction.WEST: Direction.EAST,
}
_LEFT = {
    Direction.NORTH: Direction.WEST,
    Direction.WEST: Direction.SOUTH,
    Direction.SOUTH: Direction.EAST,
    Direction.EAST: Direction.NORTH,
}
_WALL_BITS = {
    Direction.NORTH: 1,
    Direction.EAST: 2,
    Direction.SOUTH: 4,
    Direction.WEST: 8,
}


@dataclass(frozen=True, order=True)
class Position:
    """Grid cell coordinate; col grows eastward, row grows southward."""

    col: int
    row: int

    def step(self, d: Direction) -> "Position":
        dc, dr = d.delta
        return Position(self.col + dc, self.row + dr)

    def distance_sq(self, other: "Position") -> int:
        dc = self.col - other.col
        dr = self.row - other.row
        return dc * dc + dr * dr

    def manhattan(self, other: "Position") -> int:
        return abs(self.col - other.col) + abs(self.row - other.row)


def mix64(z: int) -> int:
    """SplitMix64 finalizer."""
    z &= MASK64
    z ^= z >> 30
    z = (z * _MIX1) & MASK64
    z ^= z >> 27
    z = (z * _MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64(state: int) -> tuple[int, int]:
    """Advance raw SplitMix64 state by one step; returns (state', value)."""
    state = (state + _GAMMA) & MASK64
    return state, mix64(state)


@dataclass(frozen=True)
class Rng:
    """Value-style SplitMix64 stream: advancing returns a new Rng.

    next() is a pure function of state, so serializing the state and resuming
    continues the identical sequence.
    """

    state: int = 0

    def next(self) -> tuple["Rng", int]:
        state, value = splitmix64(self.state)
        return Rng(state), value

    def below(self, k: int) -> tuple["Rng", int]:
        """One draw reduced mod k (bias accepted for portability); k >= 1."""
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        rng, value = self.next()
        return rng, value % k


def derive_seed(base: int, salt: int) -> int:
    """Deterministic sub-stream seed: one SplitMix64 step of (base xor salt).

    Used for per-level maze seeds (salt = level), per-level brain streams,
    and per-episode batch seeds (salt = episode index).
    """
    _, value = splitmix64((base ^ salt) & MASK64)
    return value


class EventKind(Enum):
    GROWL = "growl"
    CAUGHT = "caught"
    LEVEL_FINISHED = "finished_level"
    GAME_FINISHED = "finished_game"
    BLOCKED = "blocked"
    MOVED = "moved"


@dataclass(frozen=True)
class GameEvent:
    """Something that happened during one tick, for clients and transcripts."""

    kind: EventKind
    tick: int
    position: Position | None = None
    direction: Direction | None = None

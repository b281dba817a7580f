"""Seeded perfect-maze generation via the depth-first recursive backtracker.

The carve order is pinned exactly (unvisited neighbours listed N,E,S,W and
indexed by one bounded RNG draw per carve, even when only one option remains)
so a (width, height, seed) triple always yields the identical maze.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .model import DIRECTIONS, MASK64, Direction, Position, _GAMMA, _MIX1, _MIX2

_ALL_WALLS = 0x0F


@dataclass(frozen=True)
class MazeSpec:
    width: int
    height: int
    seed: int


@dataclass(frozen=True)
class Maze:
    """Immutable cell grid with per-cell wall masks (N=1 E=2 S=4 W=8).

    The single perimeter opening is the exit; everything else on the border
    is walled. Shared walls are stored on both adjacent cells.
    """

    width: int
    height: int
    walls: bytes  # row-major, one mask byte per cell
    exit_cell: Position
    exit_side: Direction
    hero_start: Position
    monster_start: Position

    def index(self, pos: Position) -> int:
        return pos.row * self.width + pos.col

    def in_bounds(self, pos: Position) -> bool:
        return 0 <= pos.col < self.width and 0 <= pos.row < self.height

    def wall(self, pos: Position, d: Direction) -> bool:
        return bool(self.walls[pos.row * self.width + pos.col] & d.wall_bit)

    def wallmask(self, pos: Position) -> int:
        return self.walls[pos.row * self.width + pos.col]

    def open_directions(self, pos: Position) -> list[Direction]:
        """Open passages to in-bounds neighbours, in N,E,S,W order.

        The exit opening leads out of the grid and is deliberately excluded;
        actors cannot path through it (escape is an engine rule, not a move).
        """
        mask = self.walls[pos.row * self.width + pos.col]
        out = []
        for d in DIRECTIONS:
            if not (mask & d.wall_bit) and self.in_bounds(pos.step(d)):
                out.append(d)
        return out


@lru_cache(maxsize=32)
def _neighbor_table(width: int, height: int) -> tuple:
    """Per-cell tuple of (neighbor_index, wall_bit, opposite_bit) in N,E,S,W order."""
    table = []
    for row in range(height):
        for col in range(width):
            entries = []
            for d in DIRECTIONS:
                dc, dr = d.delta
                nc, nr = col + dc, row + dr
                if 0 <= nc < width and 0 <= nr < height:
                    entries.append((nr * width + nc, d.wall_bit, d.opposite.wall_bit))
            table.append(tuple(entries))
    return tuple(table)


def generate_maze(spec: MazeSpec) -> Maze:
    """Carve a perfect maze, then place the exit and the monster spawn.

    Exit: the farthest-by-BFS perimeter cell from the hero start (ties: smaller
    row, then smaller col) gets its outward wall opened, preferring sides in
    N,E,S,W order. Monster spawn: the farthest cell overall, same tie-break.
    """
    width, height = spec.width, spec.height
    if not (1 <= width <= 255) or not (1 <= height <= 255):
        raise ValueError(f"maze dimensions must be in [1, 255], got {width}x{height}")

    n = width * height
    walls = bytearray(b"\x0f" * n)
    visited = bytearray(n)
    neighbors = _neighbor_table(width, height)

    # Inlined SplitMix64: this loop dominates batch generation time.
    state = spec.seed & MASK64
    stack = [0]
    visited[0] = 1
    while stack:
        cell = stack[-1]
        options = [t for t in neighbors[cell] if not visited[t[0]]]
        if not options:
            stack.pop()
            continue
        state = (state + _GAMMA) & MASK64
        z = state
        z ^= z >> 30
        z = (z * _MIX1) & MASK64
        z ^= z >> 27
        z = (z * _MIX2) & MASK64
        z ^= z >> 31
        nxt, bit, opp = options[z % len(options)]
        walls[cell] &= _ALL_WALLS ^ bit
        walls[nxt] &= _ALL_WALLS ^ opp
        visited[nxt] = 1
        stack.append(nxt)

    hero_start = Position(0, 0)
    dist = _distances(width, height, walls, 0)

    exit_idx = -1
    best = -1
    for row in range(height):
        for col in range(width):
            if row == 0 or row == height - 1 or col == 0 or col == width - 1:
                idx = row * width + col
                if dist[idx] > best:
                    best = dist[idx]
                    exit_idx = idx
    exit_cell = Position(exit_idx % width, exit_idx // width)
    if exit_cell.row == 0:
        exit_side = Direction.NORTH
    elif exit_cell.col == width - 1:
        exit_side = Direction.EAST
    elif exit_cell.row == height - 1:
        exit_side = Direction.SOUTH
    else:
        exit_side = Direction.WEST
    walls[exit_idx] &= _ALL_WALLS ^ exit_side.wall_bit

    monster_idx = max(range(n), key=lambda i: dist[i])  # row-major scan keeps tie-break
    monster_start = Position(monster_idx % width, monster_idx // width)

    return Maze(
        width=width,
        height=height,
        walls=bytes(walls),
        exit_cell=exit_cell,
        exit_side=exit_side,
        hero_start=hero_start,
        monster_start=monster_start,
    )


def _distances(width: int, height: int, walls, start: int) -> list[int]:
    """BFS hop counts over open internal passages; -1 for unreachable cells."""
    dist = [-1] * (width * height)
    dist[start] = 0
    queue = deque([start])
    neighbors = _neighbor_table(width, height)
    while queue:
        cell = queue.popleft()
        mask = walls[cell]
        d = dist[cell] + 1
        for nxt, bit, _ in neighbors[cell]:
            if not (mask & bit) and dist[nxt] < 0:
                dist[nxt] = d
                queue.append(nxt)
    return dist


def distance_map(m: Maze, start: Position) -> list[int]:
    """Row-major BFS distances from start; -1 where unreachable."""
    return _distances(m.width, m.height, m.walls, m.index(start))


def farthest_cell(m: Maze, start: Position) -> tuple[Position, int]:
    """Maximum-BFS-distance cell from start; ties broken by smaller row, then col."""
    if not m.in_bounds(start):
        raise ValueError(f"start {start} outside {m.width}x{m.height} grid")
    dist = distance_map(m, start)
    idx = max(range(len(dist)), key=lambda i: dist[i])
    return Position(idx % m.width, idx // m.width), dist[idx]


def is_perfect(m: Maze) -> bool:
    """True iff the open-passage graph is a spanning tree of the grid.

    Connectivity is checked by BFS; acyclicity by counting open internal
    passages (the exit opening does not count), which must equal cells - 1.
    """
    n = m.width * m.height
    dist = _distances(m.width, m.height, m.walls, 0)
    if any(d < 0 for d in dist):
        return False
    passages = 0
    for row in range(m.height):
        for col in range(m.width):
            mask = m.walls[row * m.width + col]
            if col + 1 < m.width and not (mask & Direction.EAST.wall_bit):
                passages += 1
            if row + 1 < m.height and not (mask & Direction.SOUTH.wall_bit):
                passages += 1
    return passages == n - 1

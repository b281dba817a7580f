"""Shared test helpers: hand-built mazes and independent graph oracles."""

from labyrinth.mazegen import Maze
from labyrinth.model import DIRECTIONS, Direction, Position

_BIT = {d: d.wall_bit for d in DIRECTIONS}


def build_maze(
    width: int,
    height: int,
    passages: list[tuple[int, int, Direction]],
    exit_cell: tuple[int, int] = (0, 0),
    exit_side: Direction = Direction.NORTH,
    hero_start: tuple[int, int] = (0, 0),
    monster_start: tuple[int, int] = (0, 0),
) -> Maze:
    """Construct a maze from an explicit passage list (shared walls kept consistent)."""
    walls = bytearray(b"\x0f" * (width * height))
    for col, row, d in passages:
        dc, dr = d.delta
        nc, nr = col + dc, row + dr
        assert 0 <= nc < width and 0 <= nr < height, "passage must stay in bounds"
        walls[row * width + col] &= 0x0F ^ _BIT[d]
        walls[nr * width + nc] &= 0x0F ^ _BIT[d.opposite]
    ec = Position(*exit_cell)
    walls[ec.row * width + ec.col] &= 0x0F ^ _BIT[exit_side]
    return Maze(
        width=width,
        height=height,
        walls=bytes(walls),
        exit_cell=ec,
        exit_side=exit_side,
        hero_start=Position(*hero_start),
        monster_start=Position(*monster_start),
    )


def union_find_is_tree(maze: Maze) -> bool:
    """Independent perfect-maze oracle: union-find over open internal passages."""
    n = maze.width * maze.height
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = 0
    for row in range(maze.height):
        for col in range(maze.width):
            pos = Position(col, row)
            for d in (Direction.EAST, Direction.SOUTH):
                nxt = pos.step(d)
                if maze.in_bounds(nxt) and not maze.wall(pos, d):
                    edges += 1
                    a, b = find(maze.index(pos)), find(maze.index(nxt))
                    if a == b:
                        return False  # cycle
                    parent[a] = b
    roots = {find(i) for i in range(n)}
    return edges == n - 1 and len(roots) == 1


def oracle_bfs_distances(maze: Maze, start: Position) -> dict[Position, int]:
    """Second BFS implementation (dict/frontier based) for cross-checking."""
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt_frontier = []
        for pos in frontier:
            for d in DIRECTIONS:
                if maze.wall(pos, d):
                    continue
                nxt = pos.step(d)
                if maze.in_bounds(nxt) and nxt not in dist:
                    dist[nxt] = dist[pos] + 1
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    return dist

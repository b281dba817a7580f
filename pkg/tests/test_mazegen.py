"""Maze generation: golden layouts, perfectness, placement, and determinism."""

import pytest
from conftest import oracle_bfs_distances, union_find_is_tree

from labyrinth.mazegen import Maze, MazeSpec, farthest_cell, generate_maze, is_perfect
from labyrinth.model import DIRECTIONS, Direction, Position, Rng

# Frozen from an independent recursive implementation (per-cell wall dicts,
# true recursion): wallmasks row-major with N=1 E=2 S=4 W=8.
GOLDEN_3X3_SEED42 = bytes([11, 9, 3, 10, 10, 10, 12, 6, 12])


def test_golden_3x3_seed42():
    m = generate_maze(MazeSpec(3, 3, 42))
    assert m.walls == GOLDEN_3X3_SEED42
    assert m.exit_cell == Position(2, 2)
    assert m.exit_side is Direction.EAST
    assert m.hero_start == Position(0, 0)
    assert m.monster_start == Position(2, 2)


def test_single_cell_maze():
    m = generate_maze(MazeSpec(1, 1, 7))
    # three perimeter walls plus the exit opening on the north side
    assert m.walls == bytes([14])
    assert m.exit_cell == Position(0, 0)
    assert m.exit_side is Direction.NORTH
    assert m.hero_start == Position(0, 0)


@pytest.mark.parametrize("seed", [0, 7, 999, 2**64 - 1])
def test_two_by_one_has_exactly_one_internal_passage(seed):
    m = generate_maze(MazeSpec(2, 1, seed))
    assert not m.wall(Position(0, 0), Direction.EAST)
    assert not m.wall(Position(1, 0), Direction.WEST)
    internal_open = sum(
        1
        for col in range(1)
        if not m.wall(Position(col, 0), Direction.EAST)
    )
    assert internal_open == 1


def test_determinism_byte_identical():
    spec = MazeSpec(17, 11, 123456789)
    assert generate_maze(spec) == generate_maze(spec)
    assert generate_maze(spec).walls == generate_maze(spec).walls


@pytest.mark.parametrize("bad", [(0, 5), (5, 0), (256, 5), (5, 256)])
def test_dimension_validation(bad):
    with pytest.raises(ValueError):
        generate_maze(MazeSpec(bad[0], bad[1], 1))


def _random_specs(n, lo=2, hi=30, seed=99):
    rng = Rng(seed)
    for _ in range(n):
        rng, w = rng.below(hi - lo + 1)
        rng, h = rng.below(hi - lo + 1)
        rng, s = rng.next()
        yield MazeSpec(lo + w, lo + h, s)


def test_generated_mazes_are_perfect_by_independent_oracle():
    for spec in _random_specs(200):
        m = generate_maze(spec)
        assert is_perfect(m)
        assert union_find_is_tree(m)


def test_is_perfect_rejects_disconnection_and_cycles():
    m = generate_maze(MazeSpec(6, 6, 5))
    assert is_perfect(m)

    # find one open internal passage and re-wall it -> disconnected tree
    walls = bytearray(m.walls)
    for idx in range(len(walls)):
        pos = Position(idx % 6, idx // 6)
        nxt = pos.step(Direction.EAST)
        if m.in_bounds(nxt) and not m.wall(pos, Direction.EAST):
            walls[idx] |= Direction.EAST.wall_bit
            walls[m.index(nxt)] |= Direction.WEST.wall_bit
            break
    rewalled = Maze(6, 6, bytes(walls), m.exit_cell, m.exit_side, m.hero_start, m.monster_start)
    assert not is_perfect(rewalled)
    assert not union_find_is_tree(rewalled)

    # knock out one internal wall -> cycle
    walls = bytearray(m.walls)
    for idx in range(len(walls)):
        pos = Position(idx % 6, idx // 6)
        nxt = pos.step(Direction.EAST)
        if m.in_bounds(nxt) and m.wall(pos, Direction.EAST):
            walls[idx] &= 0x0F ^ Direction.EAST.wall_bit
            walls[m.index(nxt)] &= 0x0F ^ Direction.WEST.wall_bit
            break
    holed = Maze(6, 6, bytes(walls), m.exit_cell, m.exit_side, m.hero_start, m.monster_start)
    assert not is_perfect(holed)
    assert not union_find_is_tree(holed)


def test_shared_wall_consistency_after_generation():
    for spec in _random_specs(50, seed=7):
        m = generate_maze(spec)
        for row in range(m.height):
            for col in range(m.width):
                pos = Position(col, row)
                for d in DIRECTIONS:
                    nxt = pos.step(d)
                    if m.in_bounds(nxt):
                        assert m.wall(pos, d) == m.wall(nxt, d.opposite)


def test_perimeter_sealed_except_exit():
    for spec in _random_specs(50, seed=13):
        m = generate_maze(spec)
        openings = []
        for row in range(m.height):
            for col in range(m.width):
                pos = Position(col, row)
                for d in DIRECTIONS:
                    if not m.in_bounds(pos.step(d)) and not m.wall(pos, d):
                        openings.append((pos, d))
        assert openings == [(m.exit_cell, m.exit_side)]


def test_starts_distinct_beyond_one_cell():
    for spec in _random_specs(50, seed=21):
        m = generate_maze(spec)
        assert m.hero_start != m.monster_start


class TestFarthestCell:
    def test_single_cell(self):
        m = generate_maze(MazeSpec(1, 1, 3))
        assert farthest_cell(m, Position(0, 0)) == (Position(0, 0), 0)

    def test_corridor(self):
        m = generate_maze(MazeSpec(3, 1, 11))  # forced topology: open corridor
        assert farthest_cell(m, Position(0, 0)) == (Position(2, 0), 2)

    def test_matches_independent_bfs_on_10x10(self):
        m = generate_maze(MazeSpec(10, 10, 2024))
        cell, dist = farthest_cell(m, Position(0, 0))
        oracle = oracle_bfs_distances(m, Position(0, 0))
        assert dist == max(oracle.values())
        assert oracle[cell] == dist
        # tie-break: no cell at the same distance precedes it in row-major order
        for pos, d in oracle.items():
            if d == dist and (pos.row, pos.col) < (cell.row, cell.col):
                pytest.fail(f"{pos} at distance {d} precedes {cell}")

    def test_out_of_bounds_start_rejected(self):
        m = generate_maze(MazeSpec(4, 4, 1))
        with pytest.raises(ValueError):
            farthest_cell(m, Position(4, 0))


def test_seed_sensitivity_sample():
    layouts = {generate_maze(MazeSpec(20, 20, seed)).walls for seed in range(300)}
    assert len(layouts) == 300

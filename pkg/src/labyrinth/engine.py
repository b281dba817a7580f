"""The fixed-tick session state machine: phases, input handling, movement,
capture/escape resolution, level progression, and fog-filtered snapshots.

Real time lives entirely in clients; a session only advances when step() is
called, and (config, seed, input log) pins every field at every tick. Within
one Playing tick the resolution order is normative:

  1. hero moves along the pending intent if that passage is open
     (Blocked event otherwise); the intent is consumed either way
  2. escape check: standing in the exit cell with the intent pointing out
     the exit side finishes the level (or the game on the last level) and
     skips rules 3-5
  3. on ticks where tick % monster_step_period == 0 the monster moves
  4. capture check over this tick's transitions (co-location or swap)
  5. hearing check emits a Growl
  6. tick += 1 (always, so logged input ticks replay unambiguously)
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass, field
from enum import Enum

from .brain import Brain, Observation, monster_sprite_key
from .errors import ConfigError
from .mazegen import Maze, MazeSpec, generate_maze
from .model import (
    MASK64,
    Direction,
    EventKind,
    GameEvent,
    Position,
    Rng,
    derive_seed,
)
from .properties import GameConfig, validate_config
from .sensing import DifficultyPolicy, caught_check, hearing_check, visible_cells

DEFAULT_START_DIFFICULTY = "medium"


class Phase(Enum):
    SPLASH = "splash"
    INSTRUCTIONS = "instructions"
    PLAYING = "playing"
    LEVEL_FINISHED = "finished_level"
    GAME_OVER = "game_over"
    GAME_FINISHED = "finished_game"


TERMINAL_PHASES = (Phase.GAME_OVER, Phase.GAME_FINISHED)


class InputKind(Enum):
    KEY = "key"
    ADVANCE = "advance"
    SELECT = "select"
    RESTART = "restart"


@dataclass(frozen=True)
class InputEvent:
    kind: InputKind
    direction: Direction | None = None
    difficulty: str | None = None

    @staticmethod
    def key(d: Direction) -> "InputEvent":
        return InputEvent(InputKind.KEY, direction=d)

    @staticmethod
    def advance() -> "InputEvent":
        return InputEvent(InputKind.ADVANCE)

    @staticmethod
    def select(difficulty: str) -> "InputEvent":
        return InputEvent(InputKind.SELECT, difficulty=difficulty)

    @staticmethod
    def restart() -> "InputEvent":
        return InputEvent(InputKind.RESTART)


@dataclass(frozen=True)
class ClientView:
    """Fog-filtered snapshot: the only state a rendering client ever sees."""

    phase: Phase
    tick: int
    level: int
    hero: Position
    visible: list[tuple[Position, int]]  # (cell, wallmask), sorted by row then col
    monster: Position | None
    heard: bool
    facing_sprite: str
    events: list[GameEvent]


def level_dimensions(config: GameConfig, level: int) -> tuple[int, int]:
    """Level k plays on (w1 + 2(k-1)) x (h1 + 2(k-1)) cells, capped at 255."""
    grow = 2 * (level - 1)
    return min(255, config.level1_width + grow), min(255, config.level1_height + grow)


@dataclass
class Session:
    """One complete playthrough. Mutated in place by apply_input and step.

    A Restart input re-initializes the session in place, beginning a fresh
    lifetime: the tick counter and input log restart from scratch exactly as
    a newly constructed session would.
    """

    config: GameConfig
    base_seed: int
    initial_difficulty: str
    phase: Phase = Phase.SPLASH
    difficulty_name: str = ""
    difficulty: DifficultyPolicy = None
    level: int = 1
    maze: Maze = None
    hero: Position = None
    monster: Position = None
    monster_facing: Direction = Direction.SOUTH
    tick: int = 0
    pending_intent: Direction | None = None
    brain: Brain = None
    rng: Rng = field(default_factory=Rng)
    input_log: list[tuple[int, InputEvent]] = field(default_factory=list)
    pending_events: list[GameEvent] = field(default_factory=list)


def new_session(
    config: GameConfig,
    seed: int,
    difficulty: str = DEFAULT_START_DIFFICULTY,
) -> Session:
    """Fresh session at the splash screen with the level-1 maze generated."""
    validate_config(config)
    if difficulty not in config.difficulty_table:
        raise ConfigError(f"unknown difficulty {difficulty!r}", key="difficulty")
    s = Session(config=config, base_seed=seed & MASK64, initial_difficulty=difficulty)
    _reset(s)
    return s


def _reset(s: Session) -> None:
    s.phase = Phase.SPLASH
    s.difficulty_name = s.initial_difficulty
    s.difficulty = s.config.difficulty_table[s.initial_difficulty]
    s.level = 1
    s.tick = 0
    s.input_log = []
    s.pending_events = []
    _enter_level(s)


def _enter_level(s: Session) -> None:
    """Generate the current level's maze and place actors and brain.

    The per-level stream is seeded by one SplitMix64 step of
    (base_seed xor level): first draw seeds the maze, second the brain,
    and the remainder becomes the session stream.
    """
    width, height = level_dimensions(s.config, s.level)
    stream = Rng((s.base_seed ^ s.level) & MASK64)
    stream, maze_seed = stream.next()
    stream, brain_seed = stream.next()
    s.maze = generate_maze(MazeSpec(width, height, maze_seed))
    s.hero = s.maze.hero_start
    s.monster = s.maze.monster_start
    s.monster_facing = Direction.SOUTH
    s.pending_intent = None
    s.brain = Brain(kind=s.config.brain_per_difficulty[s.difficulty_name], rng=Rng(brain_seed))
    s.rng = stream


def apply_input(s: Session, event: InputEvent) -> bool:
    """Route an input according to the current phase.

    Unknown (phase, event) pairs are no-ops by design, never errors. Returns
    True iff the event had an effect; accepted events are appended to the
    input log with the current tick.
    """
    kind = event.kind
    if s.phase is Phase.PLAYING and kind is InputKind.KEY:
        s.pending_intent = event.direction  # latest intent within a tick wins
    elif s.phase is Phase.SPLASH and kind is InputKind.ADVANCE:
        s.phase = Phase.INSTRUCTIONS
    elif s.phase is Phase.INSTRUCTIONS and kind is InputKind.SELECT:
        if event.difficulty not in s.config.difficulty_table:
            return False
        s.difficulty_name = event.difficulty
        s.difficulty = s.config.difficulty_table[event.difficulty]
        s.brain = Brain(
            kind=s.config.brain_per_difficulty[event.difficulty],
            rng=s.brain.rng,
        )
        s.phase = Phase.PLAYING
    elif s.phase is Phase.LEVEL_FINISHED and kind is InputKind.ADVANCE:
        s.input_log.append((s.tick, event))
        s.level += 1
        _enter_level(s)
        s.phase = Phase.PLAYING
        return True
    elif s.phase in TERMINAL_PHASES and kind is InputKind.RESTART:
        _reset(s)
        return True
    else:
        return False
    s.input_log.append((s.tick, event))
    return True


def step(s: Session) -> list[GameEvent]:
    """Advance one tick if Playing; otherwise a no-op returning no events."""
    if s.phase is not Phase.PLAYING:
        return []
    events: list[GameEvent] = []
    tick = s.tick
    maze = s.maze
    intent = s.pending_intent
    s.pending_intent = None
    hero_prev = s.hero
    monster_prev = s.monster

    # (1) hero movement
    if intent is not None:
        if maze.wall(s.hero, intent):
            events.append(GameEvent(EventKind.BLOCKED, tick, direction=intent))
        else:
            dest = s.hero.step(intent)
            if maze.in_bounds(dest):
                s.hero = dest
                events.append(GameEvent(EventKind.MOVED, tick, position=dest, direction=intent))
            # an open wall out of the grid is the exit opening; rule (2) resolves it

    # (2) escape through the exit opening
    if intent is not None and s.hero == maze.exit_cell and intent is maze.exit_side:
        if s.level >= s.config.max_level:
            events.append(GameEvent(EventKind.GAME_FINISHED, tick))
            s.phase = Phase.GAME_FINISHED
        else:
            events.append(GameEvent(EventKind.LEVEL_FINISHED, tick))
            s.phase = Phase.LEVEL_FINISHED
        s.tick = tick + 1
        s.pending_events.extend(events)
        return events

    # (3) monster movement on its cadence; a one-cell maze has nowhere to go
    if maze.width * maze.height > 1 and tick % s.difficulty.monster_step_period == 0:
        d = s.brain.choose_direction(Observation(maze, s.monster, s.hero, tick))
        s.monster = s.monster.step(d)
        s.monster_facing = d

    # (4) capture
    if caught_check(hero_prev, s.hero, monster_prev, s.monster):
        events.append(GameEvent(EventKind.CAUGHT, tick, position=s.monster))
        s.phase = Phase.GAME_OVER

    # (5) hearing
    if hearing_check(s.hero, s.monster, s.difficulty.hearing_radius):
        events.append(GameEvent(EventKind.GROWL, tick))

    # (6)
    s.tick = tick + 1
    s.pending_events.extend(events)
    return events


def snapshot(s: Session) -> ClientView:
    """Fog-filtered view; drains events accumulated since the last snapshot."""
    lit = visible_cells(s.maze.width, s.maze.height, s.hero, s.difficulty.searchlight_radius)
    visible = [
        (pos, s.maze.wallmask(pos))
        for pos in sorted(lit, key=lambda p: (p.row, p.col))
    ]
    events = list(s.pending_events)
    s.pending_events.clear()
    return ClientView(
        phase=s.phase,
        tick=s.tick,
        level=s.level,
        hero=s.hero,
        visible=visible,
        monster=s.monster if s.monster in lit else None,
        heard=hearing_check(s.hero, s.monster, s.difficulty.hearing_radius),
        facing_sprite=monster_sprite_key(s.monster_facing, s.tick),
        events=events,
    )


_DIR_INDEX = {Direction.NORTH: 0, Direction.EAST: 1, Direction.SOUTH: 2, Direction.WEST: 3}
_PHASE_INDEX = {p: i for i, p in enumerate(Phase)}
_INPUT_INDEX = {k: i for i, k in enumerate(InputKind)}


def session_digest(s: Session) -> str:
    """SHA-256 over a canonical packing of the full session state.

    Positions fit one byte per axis (dimensions are capped at 255). Pending
    events are excluded: snapshot drain timing is a client concern, not
    simulation state.
    """
    h = hashlib.sha256()
    pack = h.update
    pack(b"LBR1")
    pack(struct.pack("<BQQI", _PHASE_INDEX[s.phase], s.base_seed, s.tick, s.level))
    pack(_text(s.initial_difficulty))
    pack(_text(s.difficulty_name))
    pack(
        struct.pack(
            "<6BdId",
            s.hero.col,
            s.hero.row,
            s.monster.col,
            s.monster.row,
            _DIR_INDEX[s.monster_facing],
            255 if s.pending_intent is None else _DIR_INDEX[s.pending_intent],
            s.difficulty.searchlight_radius,
            s.difficulty.monster_step_period,
            s.difficulty.hearing_radius,
        )
    )
    m = s.maze
    pack(struct.pack("<2B", m.width, m.height))
    pack(m.walls)
    pack(struct.pack("<5B", m.exit_cell.col, m.exit_cell.row, _DIR_INDEX[m.exit_side],
                     m.monster_start.col, m.monster_start.row))
    pack(struct.pack("<Q", s.rng.state))
    b = s.brain
    pack(_text(b.kind))
    pack(struct.pack("<BQ", 255 if b.last_direction is None else _DIR_INDEX[b.last_direction],
                     b.rng.state))
    pack(struct.pack("<I", len(b.visited_counts)))
    for pos in sorted(b.visited_counts):
        pack(struct.pack("<2BI", pos.col, pos.row, b.visited_counts[pos]))
    pack(struct.pack("<I", len(s.input_log)))
    for tick, event in s.input_log:
        pack(struct.pack("<QB", tick, _INPUT_INDEX[event.kind]))
        pack(struct.pack("<B", 255 if event.direction is None else _DIR_INDEX[event.direction]))
        pack(_text(event.difficulty or ""))
    pack(struct.pack("<I2B", s.config.max_level, s.config.level1_width, s.config.level1_height))
    return h.hexdigest()


def _text(value: str) -> bytes:
    raw = value.encode("utf-8")
    return struct.pack("<H", len(raw)) + raw

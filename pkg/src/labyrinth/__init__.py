"""Labyrinth: a deterministic maze-chase engine and experimentation platform.

Seeded maze generation, pluggable monster brains, difficulty-as-visibility,
a phase state machine with replay support, headless batch simulation, and a
session server for interactive clients.
"""

from .brain import BRAIN_KINDS, Brain, Observation, monster_sprite_key, shortest_path_len
from .engine import (
    ClientView,
    InputEvent,
    Phase,
    Session,
    apply_input,
    new_session,
    session_digest,
    snapshot,
    step,
)
from .mazegen import Maze, MazeSpec, farthest_cell, generate_maze, is_perfect
from .model import Direction, EventKind, GameEvent, Position, Rng
from .properties import (
    GameConfig,
    PropertyMap,
    default_config,
    parse_properties,
    resolve_config,
    serialize_properties,
)
from .render import render_text
from .replay import parse_replay, run_replay, verify_replay, write_replay
from .sensing import DifficultyPolicy, caught_check, hearing_check, visible_cells
from .simulate import BatchStats, HeroPolicy, run_batch

__version__ = "0.1.0"

__all__ = [
    "BRAIN_KINDS",
    "BatchStats",
    "Brain",
    "ClientView",
    "DifficultyPolicy",
    "Direction",
    "EventKind",
    "GameConfig",
    "GameEvent",
    "HeroPolicy",
    "InputEvent",
    "Maze",
    "MazeSpec",
    "Observation",
    "Phase",
    "Position",
    "PropertyMap",
    "Rng",
    "Session",
    "apply_input",
    "caught_check",
    "default_config",
    "farthest_cell",
    "generate_maze",
    "hearing_check",
    "is_perfect",
    "monster_sprite_key",
    "new_session",
    "parse_properties",
    "parse_replay",
    "render_text",
    "resolve_config",
    "run_batch",
    "run_replay",
    "serialize_properties",
    "session_digest",
    "shortest_path_len",
    "snapshot",
    "step",
    "verify_replay",
    "visible_cells",
    "write_replay",
]

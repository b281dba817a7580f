"""Headless batch simulation: scripted hero policies vs monster brains.

Episodes are seed-isolated (episode i derives its session seed from the batch
seed and i alone), so results are independent of execution order and a batch
is reproducible from its arguments.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field, replace

from .brain import BRAIN_KINDS
from .engine import InputEvent, Phase, Session, apply_input, new_session, step
from .mazegen import distance_map
from .model import Direction, Position, Rng, derive_seed
from .properties import GameConfig

HERO_POLICIES = ("stationary", "random_walk", "bfs_to_exit")

EPISODE_TICK_CAP = 10_000  # a capped episode counts as an escape

_HERO_STREAM_SALT = 0x4845524F  # distinct sub-stream per episode for hero draws


@dataclass
class HeroPolicy:
    """Scripted hero controller feeding intents into the engine each tick."""

    kind: str
    rng: Rng = field(default_factory=Rng)
    _path: list[Direction] = field(default_factory=list)
    _path_level: int = -1

    def __post_init__(self):
        if self.kind not in HERO_POLICIES:
            raise ValueError(f"unknown hero policy {self.kind!r}")

    def next_intent(self, s: Session) -> Direction | None:
        if self.kind == "stationary":
            return None
        if self.kind == "random_walk":
            options = s.maze.open_directions(s.hero)
            if not options:
                return None
            self.rng, idx = self.rng.below(len(options))
            return options[idx]
        # bfs_to_exit: walk the unique path to the exit cell, then out the opening
        if self._path_level != s.level:
            self._path = _path_to_exit(s)
            self._path_level = s.level
        if self._path:
            return self._path.pop(0)
        return s.maze.exit_side if s.hero == s.maze.exit_cell else None


def _path_to_exit(s: Session) -> list[Direction]:
    """Directions from the hero to the exit cell, plus the step out the opening."""
    maze = s.maze
    dist = distance_map(maze, maze.exit_cell)
    pos = s.hero
    path = []
    while pos != maze.exit_cell:
        for d in maze.open_directions(pos):
            nxt = pos.step(d)
            if dist[maze.index(nxt)] == dist[maze.index(pos)] - 1:
                path.append(d)
                pos = nxt
                break
    path.append(maze.exit_side)
    return path


@dataclass(frozen=True)
class EpisodeRecord:
    episode: int
    seed: int
    outcome: str  # "capture" | "escape"
    ticks: int


@dataclass(frozen=True)
class BatchStats:
    episodes: int
    captures: int
    escapes: int
    capture_rate: float
    mean_ticks: float
    records: tuple[EpisodeRecord, ...]

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("episode,seed,outcome,ticks\n")
        for r in self.records:
            out.write(f"{r.episode},{r.seed},{r.outcome},{r.ticks}\n")
        return out.getvalue()


def run_episode(config: GameConfig, difficulty: str, hero: HeroPolicy, seed: int) -> EpisodeRecord:
    """Drive one session to termination (or the tick cap) and classify it."""
    s = new_session(config, seed, difficulty)
    apply_input(s, InputEvent.advance())
    apply_input(s, InputEvent.select(difficulty))
    while s.tick < EPISODE_TICK_CAP:
        if s.phase is Phase.PLAYING:
            intent = hero.next_intent(s)
            if intent is not None:
                apply_input(s, InputEvent.key(intent))
            step(s)
        elif s.phase is Phase.LEVEL_FINISHED:
            apply_input(s, InputEvent.advance())
        else:
            break
    outcome = "capture" if s.phase is Phase.GAME_OVER else "escape"
    return EpisodeRecord(episode=-1, seed=seed, outcome=outcome, ticks=s.tick)


def run_batch(
    config: GameConfig,
    difficulty: str,
    brain: str,
    hero: str | HeroPolicy,
    episodes: int,
    base_seed: int,
) -> BatchStats:
    """Run seed-isolated episodes and aggregate capture statistics.

    The requested brain overrides the difficulty's default for every episode.
    Episodes could run in parallel without changing the result; this runner
    keeps them sequential for simplicity.
    """
    if episodes < 1:
        raise ValueError("episodes must be >= 1")
    if difficulty not in config.difficulty_table:
        raise ValueError(f"unknown difficulty {difficulty!r}")
    if brain not in BRAIN_KINDS:
        raise ValueError(f"unknown brain {brain!r}")
    hero_kind = hero.kind if isinstance(hero, HeroPolicy) else hero
    if hero_kind not in HERO_POLICIES:
        raise ValueError(f"unknown hero policy {hero_kind!r}")

    brains = dict(config.brain_per_difficulty)
    brains[difficulty] = brain
    cfg = replace(config, brain_per_difficulty=brains)

    records = []
    total_ticks = 0
    captures = 0
    for i in range(episodes):
        seed = derive_seed(base_seed, i)
        policy = HeroPolicy(hero_kind, rng=Rng(derive_seed(seed, _HERO_STREAM_SALT)))
        record = replace(run_episode(cfg, difficulty, policy, seed), episode=i)
        records.append(record)
        total_ticks += record.ticks
        captures += record.outcome == "capture"

    return BatchStats(
        episodes=episodes,
        captures=captures,
        escapes=episodes - captures,
        capture_rate=captures / episodes,
        mean_ticks=total_ticks / episodes,
        records=tuple(records),
    )

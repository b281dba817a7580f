"""Replay files: a seed plus a tick-stamped input log reproduces a session.

File format (UTF-8, line-based):

    labyrinth-replay v1 seed=<u64> difficulty=<name> levels=<n>
    :<tick> key N|E|S|W
    :<tick> advance
    :<tick> select <difficulty>
    :<tick> restart
    #digest <hex>

Ticks must be non-decreasing, which means a restart (tick counter resets)
can only be the final entry; recorders should begin a new file after one.
When a run continued past its last accepted input, the recorder appends a
trailing `advance` line at the final tick: it replays as a no-op but carries
the step count, so the digest covers the whole run.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .engine import (
    DEFAULT_START_DIFFICULTY,
    InputEvent,
    InputKind,
    Phase,
    Session,
    apply_input,
    new_session,
    session_digest,
    step,
)
from .errors import ReplayDigestMismatch, ReplayFormatError
from .model import Direction
from .properties import GameConfig

_HEADER_PREFIX = "labyrinth-replay v1"


@dataclass(frozen=True)
class ReplayFile:
    seed: int
    difficulty: str
    levels: int
    entries: tuple[tuple[int, InputEvent], ...]
    digest: str


def run_replay(
    config: GameConfig,
    seed: int,
    log: list[tuple[int, InputEvent]],
    difficulty: str = DEFAULT_START_DIFFICULTY,
) -> Session:
    """Re-drive a session from its input log and return the final state.

    Each event applies once the session has stepped up to its tick; ticks
    only advance while Playing, so events recorded in menu phases apply
    immediately, in order.
    """
    last = -1
    for tick, _ in log:
        if tick < 0 or tick < last:
            raise ReplayFormatError(f"log ticks must be sorted and non-negative, got {tick}")
        last = tick
    s = new_session(config, seed, difficulty)
    for tick, event in log:
        while s.phase is Phase.PLAYING and s.tick < tick:
            step(s)
        apply_input(s, event)
    return s


def record_entry(entries: list[tuple[int, InputEvent]], session: Session, event: InputEvent) -> bool:
    """Apply an input and, if the session accepted it, log it for the replay."""
    tick = session.tick
    if apply_input(session, event):
        entries.append((tick, event))
        return True
    return False


def finalize_entries(entries: list[tuple[int, InputEvent]], session: Session) -> None:
    """Append the trailing no-op that pins the run's final tick, if needed."""
    if not entries or entries[-1][0] < session.tick:
        entries.append((session.tick, InputEvent.advance()))


def write_replay(rf: ReplayFile) -> str:
    lines = [f"{_HEADER_PREFIX} seed={rf.seed} difficulty={rf.difficulty} levels={rf.levels}"]
    for tick, event in rf.entries:
        lines.append(f":{tick} {_format_event(event)}")
    lines.append(f"#digest {rf.digest}")
    return "\n".join(lines) + "\n"


def parse_replay(text: str) -> ReplayFile:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith(_HEADER_PREFIX + " "):
        raise ReplayFormatError("missing replay header")
    header = {}
    for token in lines[0][len(_HEADER_PREFIX):].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ReplayFormatError(f"bad header token {token!r}")
        header[key] = value
    try:
        seed = int(header["seed"])
        difficulty = header["difficulty"]
        levels = int(header["levels"])
    except (KeyError, ValueError) as exc:
        raise ReplayFormatError(f"bad header: {exc}") from None
    if not lines[-1].startswith("#digest "):
        raise ReplayFormatError("missing digest line")
    digest = lines[-1].split(" ", 1)[1].strip()
    entries = []
    for line in lines[1:-1]:
        if not line.startswith(":"):
            raise ReplayFormatError(f"bad entry line {line!r}")
        head, _, rest = line[1:].partition(" ")
        try:
            tick = int(head)
        except ValueError:
            raise ReplayFormatError(f"bad tick in {line!r}") from None
        entries.append((tick, _parse_event(rest.strip(), line)))
    return ReplayFile(seed, difficulty, levels, tuple(entries), digest)


def verify_replay(config: GameConfig, text: str) -> str:
    """Replay the file and compare digests; returns the digest on success."""
    rf = parse_replay(text)
    cfg = replace(config, max_level=rf.levels)
    final = run_replay(cfg, rf.seed, list(rf.entries), rf.difficulty)
    actual = session_digest(final)
    if actual != rf.digest:
        raise ReplayDigestMismatch(rf.digest, actual)
    return actual


def replay_for_session(session: Session, entries: list[tuple[int, InputEvent]]) -> ReplayFile:
    return ReplayFile(
        seed=session.base_seed,
        difficulty=session.initial_difficulty,
        levels=session.config.max_level,
        entries=tuple(entries),
        digest=session_digest(session),
    )


_DIR_TOKENS = {d.value: d for d in Direction}


def _format_event(event: InputEvent) -> str:
    if event.kind is InputKind.KEY:
        return f"key {event.direction.value}"
    if event.kind is InputKind.SELECT:
        return f"select {event.difficulty}"
    return event.kind.value


def _parse_event(text: str, line: str) -> InputEvent:
    parts = text.split()
    if parts[:1] == ["key"] and len(parts) == 2 and parts[1] in _DIR_TOKENS:
        return InputEvent.key(_DIR_TOKENS[parts[1]])
    if parts[:1] == ["select"] and len(parts) == 2:
        return InputEvent.select(parts[1])
    if parts == ["advance"]:
        return InputEvent.advance()
    if parts == ["restart"]:
        return InputEvent.restart()
    raise ReplayFormatError(f"bad event in {line!r}")

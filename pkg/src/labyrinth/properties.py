"""Line-based key=value properties parsing and game-config resolution.

The grammar is pinned exactly: split lines at the first '=', trim key and
value, '#' starts a comment line, duplicates are allowed with last-wins
lookup. Unknown keys produce warnings rather than errors so a modified file
with extra keys never bricks the game.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .brain import BRAIN_KINDS
from .errors import ConfigError, PropertiesParseError
from .sensing import DEFAULT_DIFFICULTIES, DIFFICULTY_ORDER, DifficultyPolicy

DEFAULT_PROPERTIES_PATH = "labyrinth.properties"

DEFAULT_BRAINS = {
    "super_easy": "random_walk",
    "easy": "wall_follower",
    "medium": "greedy_chase",
    "difficult": "bfs_chase",
}

DEFAULT_RESOURCES = {
    "image.hero": "assets/hero.png",
    "image.monster.n.0": "assets/monster_n_0.png",
    "image.monster.n.1": "assets/monster_n_1.png",
    "image.monster.e.0": "assets/monster_e_0.png",
    "image.monster.e.1": "assets/monster_e_1.png",
    "image.monster.s.0": "assets/monster_s_0.png",
    "image.monster.s.1": "assets/monster_s_1.png",
    "image.monster.w.0": "assets/monster_w_0.png",
    "image.monster.w.1": "assets/monster_w_1.png",
    "sound.growl": "assets/growl.wav",
    "sound.footsteps": "assets/footsteps.wav",
}

DEFAULT_MAX_LEVEL = 3
DEFAULT_LEVEL1_WIDTH = 13
DEFAULT_LEVEL1_HEIGHT = 9


@dataclass(frozen=True)
class PropertyMap:
    """Ordered key/value entries with last-wins lookup."""

    entries: tuple[tuple[str, str], ...] = ()

    def get(self, key: str, default: str | None = None) -> str | None:
        for k, v in reversed(self.entries):
            if k == key:
                return v
        return default

    def keys(self) -> list[str]:
        return [k for k, _ in self.entries]


@dataclass(frozen=True)
class GameConfig:
    """Fully resolved, validated configuration for a session."""

    difficulty_table: dict[str, DifficultyPolicy]
    brain_per_difficulty: dict[str, str]
    max_level: int = DEFAULT_MAX_LEVEL
    level1_width: int = DEFAULT_LEVEL1_WIDTH
    level1_height: int = DEFAULT_LEVEL1_HEIGHT
    resource_map: dict[str, str] = field(default_factory=dict)


def default_config() -> GameConfig:
    return GameConfig(
        difficulty_table=dict(DEFAULT_DIFFICULTIES),
        brain_per_difficulty=dict(DEFAULT_BRAINS),
        resource_map=dict(DEFAULT_RESOURCES),
    )


def parse_properties(text: str) -> PropertyMap:
    """Parse properties text; raises PropertiesParseError with a line number."""
    entries = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()  # also eats the CR of CRLF files
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise PropertiesParseError(line_no, f"missing '=' in {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if not key:
            raise PropertiesParseError(line_no, "empty key")
        entries.append((key, value.strip()))
    return PropertyMap(tuple(entries))


def serialize_properties(p: PropertyMap) -> str:
    """One key=value line per entry, in order; round-trips through parse."""
    return "".join(f"{k}={v}\n" for k, v in p.entries)


def load_properties_file(path: str) -> PropertyMap:
    with open(path, encoding="utf-8") as fp:
        return parse_properties(fp.read())


def resolve_config(p: PropertyMap) -> tuple[GameConfig, list[str]]:
    """Apply recognized overrides to the defaults; unknown keys become warnings.

    Raises ConfigError (naming the key) on unparsable values, unknown brain
    tokens, or a resulting difficulty table that breaks monotonicity.
    """
    table = dict(DEFAULT_DIFFICULTIES)
    brains = dict(DEFAULT_BRAINS)
    resources = dict(DEFAULT_RESOURCES)
    max_level = DEFAULT_MAX_LEVEL
    width = DEFAULT_LEVEL1_WIDTH
    height = DEFAULT_LEVEL1_HEIGHT
    warnings = []

    seen = {}
    for key, value in p.entries:  # last wins
        seen[key] = value

    for key, value in seen.items():
        parts = key.split(".")
        if parts[0] == "difficulty" and len(parts) == 3 and parts[1] in table:
            name, knob = parts[1], parts[2]
            policy = table[name]
            if knob == "searchlight":
                table[name] = replace(policy, searchlight_radius=_parse_float(key, value))
            elif knob == "period":
                table[name] = replace(policy, monster_step_period=_parse_int(key, value))
            elif knob == "hearing":
                table[name] = replace(policy, hearing_radius=_parse_float(key, value))
            else:
                warnings.append(key)
        elif parts[0] == "brain" and len(parts) == 2 and parts[1] in brains:
            if value not in BRAIN_KINDS:
                raise ConfigError(f"unknown brain token {value!r}", key=key)
            brains[parts[1]] = value
        elif key == "engine.levels":
            max_level = _parse_int(key, value)
        elif key == "engine.width":
            width = _parse_int(key, value)
        elif key == "engine.height":
            height = _parse_int(key, value)
        elif parts[0] in ("image", "sound"):
            resources[key] = value
        else:
            warnings.append(key)

    config = GameConfig(
        difficulty_table=table,
        brain_per_difficulty=brains,
        max_level=max_level,
        level1_width=width,
        level1_height=height,
        resource_map=resources,
    )
    validate_config(config)
    return config, warnings


def validate_config(config: GameConfig) -> None:
    """Enforce every GameConfig invariant; raises ConfigError on violation."""
    for name in DIFFICULTY_ORDER:
        if name not in config.difficulty_table:
            raise ConfigError(f"missing difficulty {name!r}")
        policy = config.difficulty_table[name]
        if policy.searchlight_radius < 0:
            raise ConfigError("searchlight must be >= 0", key=f"difficulty.{name}.searchlight")
        if policy.monster_step_period < 1:
            raise ConfigError("period must be >= 1", key=f"difficulty.{name}.period")
        if policy.hearing_radius < policy.searchlight_radius:
            raise ConfigError(
                "hearing radius must be >= searchlight radius",
                key=f"difficulty.{name}.hearing",
            )
        if name not in config.brain_per_difficulty:
            raise ConfigError(f"missing brain for difficulty {name!r}")
        if config.brain_per_difficulty[name] not in BRAIN_KINDS:
            raise ConfigError(
                f"unknown brain token {config.brain_per_difficulty[name]!r}",
                key=f"brain.{name}",
            )
    for easier, harder in zip(DIFFICULTY_ORDER, DIFFICULTY_ORDER[1:]):
        a, b = config.difficulty_table[easier], config.difficulty_table[harder]
        if not b.searchlight_radius < a.searchlight_radius:
            raise ConfigError(
                f"searchlight must strictly decrease from {easier} to {harder}",
                key=f"difficulty.{harder}.searchlight",
            )
        if not b.monster_step_period < a.monster_step_period:
            raise ConfigError(
                f"period must strictly decrease from {easier} to {harder}",
                key=f"difficulty.{harder}.period",
            )
    if config.max_level < 1:
        raise ConfigError("levels must be >= 1", key="engine.levels")
    if not (1 <= config.level1_width <= 255):
        raise ConfigError("width must be in [1, 255]", key="engine.width")
    if not (1 <= config.level1_height <= 255):
        raise ConfigError("height must be in [1, 255]", key="engine.height")


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"expected an integer, got {value!r}", key=key) from None


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"expected a number, got {value!r}", key=key) from None

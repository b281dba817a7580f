"""Pydantic models for the HTTP endpoints and the websocket game protocol."""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, Field, TypeAdapter

MAX_SEED = (1 << 64) - 1


class StartMessage(BaseModel):
    type: Literal["start"]
    difficulty: str
    seed: int = Field(ge=0, le=MAX_SEED)


class InputMessage(BaseModel):
    type: Literal["input"]
    dir: Literal["N", "E", "S", "W"]


class AdvanceMessage(BaseModel):
    type: Literal["advance"]


class RestartMessage(BaseModel):
    type: Literal["restart"]


ClientMessage = Annotated[
    Union[StartMessage, InputMessage, AdvanceMessage, RestartMessage],
    Field(discriminator="type"),
]

client_message_adapter: TypeAdapter = TypeAdapter(ClientMessage)


class MazeRequest(BaseModel):
    width: int = Field(ge=1, le=255)
    height: int = Field(ge=1, le=255)
    seed: int = Field(ge=0, le=MAX_SEED)
    render: bool = False


class MazeResponse(BaseModel):
    width: int
    height: int
    seed: int
    walls: list[int]  # row-major wallmask per cell (N=1 E=2 S=4 W=8)
    exit_cell: tuple[int, int]
    exit_side: Literal["N", "E", "S", "W"]
    hero_start: tuple[int, int]
    monster_start: tuple[int, int]
    render: str | None = None


class BatchRequest(BaseModel):
    difficulty: str
    brain: str
    hero: str
    episodes: int = Field(ge=1)
    seed: int = Field(ge=0, le=MAX_SEED)


class EpisodeModel(BaseModel):
    episode: int
    seed: int
    outcome: Literal["capture", "escape"]
    ticks: int


class BatchResponse(BaseModel):
    episodes: int
    captures: int
    escapes: int
    capture_rate: float
    mean_ticks: float
    records: list[EpisodeModel]


class ReplayVerifyRequest(BaseModel):
    content: str


class ReplayVerifyResponse(BaseModel):
    ok: bool
    digest: str | None = None
    error: str | None = None


class DifficultyModel(BaseModel):
    name: str
    searchlight_radius: float
    monster_step_period: int
    hearing_radius: float


class ConfigResponse(BaseModel):
    difficulties: list[DifficultyModel]
    brain_per_difficulty: dict[str, str]
    max_level: int
    level1_width: int
    level1_height: int
    resource_map: dict[str, str]
    tick_rate: float

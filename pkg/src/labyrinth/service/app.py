"""FastAPI service wrapping the engine: REST helpers plus the game websocket.

Each websocket connection owns exactly one session. The server is the sole
keeper of time: it steps the session at the configured tick rate and pushes a
fog-filtered state frame after every tick (and after phase-changing inputs),
so a client can never see cells outside the searchlight.
"""

from __future__ import annotations

import asyncio
import json
from pathlib import Path

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.staticfiles import StaticFiles
from pydantic import ValidationError

from ..engine import (
    ClientView,
    InputEvent,
    Phase,
    Session,
    apply_input,
    new_session,
    snapshot,
    step,
)
from ..errors import LabyrinthError, ReplayDigestMismatch
from ..mazegen import MazeSpec, generate_maze
from ..model import Direction
from ..properties import GameConfig, default_config
from ..render import render_text
from ..replay import verify_replay
from ..simulate import run_batch
from . import schemas

DEFAULT_TICK_RATE = 8.0

_DIRECTIONS = {d.value: d for d in Direction}


def create_app(
    config: GameConfig | None = None,
    tick_rate: float = DEFAULT_TICK_RATE,
    static_dir: str | Path | None = None,
) -> FastAPI:
    cfg = config if config is not None else default_config()
    app = FastAPI(title="labyrinth", version="0.1.0")
    app.state.config = cfg
    app.state.tick_rate = tick_rate

    @app.get("/config", response_model=schemas.ConfigResponse)
    def get_config():
        return schemas.ConfigResponse(
            difficulties=[
                schemas.DifficultyModel(
                    name=p.name,
                    searchlight_radius=p.searchlight_radius,
                    monster_step_period=p.monster_step_period,
                    hearing_radius=p.hearing_radius,
                )
                for p in cfg.difficulty_table.values()
            ],
            brain_per_difficulty=cfg.brain_per_difficulty,
            max_level=cfg.max_level,
            level1_width=cfg.level1_width,
            level1_height=cfg.level1_height,
            resource_map=cfg.resource_map,
            tick_rate=tick_rate,
        )

    @app.post("/maze", response_model=schemas.MazeResponse)
    def make_maze(req: schemas.MazeRequest):
        maze = generate_maze(MazeSpec(req.width, req.height, req.seed))
        return schemas.MazeResponse(
            width=maze.width,
            height=maze.height,
            seed=req.seed,
            walls=list(maze.walls),
            exit_cell=(maze.exit_cell.col, maze.exit_cell.row),
            exit_side=maze.exit_side.value,
            hero_start=(maze.hero_start.col, maze.hero_start.row),
            monster_start=(maze.monster_start.col, maze.monster_start.row),
            render=render_text(maze) if req.render else None,
        )

    @app.post("/batch", response_model=schemas.BatchResponse)
    def make_batch(req: schemas.BatchRequest):
        try:
            stats = run_batch(cfg, req.difficulty, req.brain, req.hero, req.episodes, req.seed)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        return schemas.BatchResponse(
            episodes=stats.episodes,
            captures=stats.captures,
            escapes=stats.escapes,
            capture_rate=stats.capture_rate,
            mean_ticks=stats.mean_ticks,
            records=[schemas.EpisodeModel(**vars(r)) for r in stats.records],
        )

    @app.post("/replay/verify", response_model=schemas.ReplayVerifyResponse)
    def replay_verify(req: schemas.ReplayVerifyRequest):
        try:
            digest = verify_replay(cfg, req.content)
            return schemas.ReplayVerifyResponse(ok=True, digest=digest)
        except ReplayDigestMismatch as exc:
            return schemas.ReplayVerifyResponse(ok=False, digest=exc.actual, error=str(exc))
        except LabyrinthError as exc:
            return schemas.ReplayVerifyResponse(ok=False, error=str(exc))

    @app.websocket("/ws")
    async def game_socket(ws: WebSocket):
        await ws.accept()
        await _run_connection(ws, cfg, tick_rate)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


async def _run_connection(ws: WebSocket, cfg: GameConfig, tick_rate: float) -> None:
    loop = asyncio.get_event_loop()
    interval = 1.0 / tick_rate
    session: Session | None = None
    next_tick = loop.time() + interval
    try:
        while True:
            timeout = next_tick - loop.time()
            if timeout <= 0:
                if session is not None:
                    step(session)
                    await ws.send_text(_state_json(snapshot(session)))
                next_tick += interval
                continue
            try:
                raw = await asyncio.wait_for(ws.receive_text(), timeout)
            except asyncio.TimeoutError:
                continue
            reply = _handle_message(raw, cfg, session)
            if isinstance(reply, str):
                await ws.send_text(reply)
                continue
            session, push = reply
            if push:
                await ws.send_text(_state_json(snapshot(session)))
    except WebSocketDisconnect:
        return


def _handle_message(
    raw: str, cfg: GameConfig, session: Session | None
) -> str | tuple[Session, bool]:
    """Translate one wire message; returns an error frame or (session, push)."""
    try:
        msg = schemas.client_message_adapter.validate_json(raw)
    except ValidationError as exc:
        return _error_json(f"invalid message: {exc.errors()[0]['msg']}")

    if msg.type == "start":
        if msg.difficulty not in cfg.difficulty_table:
            return _error_json(f"unknown difficulty {msg.difficulty!r}")
        return new_session(cfg, msg.seed, msg.difficulty), True
    if session is None:
        return _error_json("no session; send start first")
    if msg.type == "input":
        apply_input(session, InputEvent.key(_DIRECTIONS[msg.dir]))
        return session, False
    if msg.type == "advance":
        # at the instructions screen, advance confirms the session's difficulty
        if session.phase is Phase.INSTRUCTIONS:
            apply_input(session, InputEvent.select(session.difficulty_name))
        else:
            apply_input(session, InputEvent.advance())
        return session, True
    apply_input(session, InputEvent.restart())
    return session, True


def _state_json(view: ClientView) -> str:
    return json.dumps(
        {
            "type": "state",
            "phase": view.phase.value,
            "tick": view.tick,
            "level": view.level,
            "hero": [view.hero.col, view.hero.row],
            "visible": [[p.col, p.row, mask] for p, mask in view.visible],
            "monster": None if view.monster is None else [view.monster.col, view.monster.row],
            "heard": view.heard,
            "sprite": view.facing_sprite,
            "events": [
                {
                    "kind": e.kind.value,
                    "tick": e.tick,
                    "pos": None if e.position is None else [e.position.col, e.position.row],
                    "dir": None if e.direction is None else e.direction.value,
                }
                for e in view.events
            ],
        },
        separators=(",", ":"),
    )


def _error_json(msg: str) -> str:
    return json.dumps({"type": "error", "msg": msg}, separators=(",", ":"))

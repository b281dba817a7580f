"""End-to-end check against a live server: every difficulty, every screen.

Spawns `labyrinth serve` on a scratch port, walks the menu flow at all four
difficulties, plays one planned run through every level to the finished-game
screen, restarts, and gets devoured once for the game-over screen. Exits 0
when all six phases were observed over the wire.

Usage: python scripts/live_check.py [port]
"""

from __future__ import annotations

import asyncio
import json
import subprocess
import sys
import tempfile
import time
import urllib.request

import websockets

from labyrinth.engine import InputEvent, Phase, apply_input, new_session, step
from labyrinth.properties import parse_properties, resolve_config
from labyrinth.simulate import HeroPolicy

PROPS = "engine.width=5\nengine.height=4\nengine.levels=2\n"
REQUIRED = {"splash", "instructions", "playing", "finished_level", "game_over", "finished_game"}

seen_phases: set[str] = set()


async def recv_phase(ws, want: str, tries: int = 400):
    for _ in range(tries):
        frame = json.loads(await ws.recv())
        if frame.get("type") == "state":
            seen_phases.add(frame["phase"])
            if frame["phase"] == want:
                return frame
    raise AssertionError(f"never reached {want!r}")


def plan_run(config, seed: int, difficulty: str):
    """Deterministic twin of the server session: the key list that wins."""
    s = new_session(config, seed, difficulty)
    apply_input(s, InputEvent.advance())
    apply_input(s, InputEvent.select(difficulty))
    hero = HeroPolicy("bfs_to_exit")
    keys = []
    for _ in range(500):
        if s.phase is Phase.PLAYING:
            intent = hero.next_intent(s)
            if intent is not None:
                apply_input(s, InputEvent.key(intent))
                keys.append(intent.value)
            step(s)
        elif s.phase is Phase.LEVEL_FINISHED:
            apply_input(s, InputEvent.advance())
        else:
            break
    return keys, s.phase


async def drive(port: int, config) -> None:
    uri = f"ws://127.0.0.1:{port}/ws"

    for difficulty in ("super_easy", "easy", "medium", "difficult"):
        async with websockets.connect(uri) as ws:
            await ws.send(json.dumps({"type": "start", "difficulty": difficulty, "seed": 11}))
            await recv_phase(ws, "splash")
            await ws.send(json.dumps({"type": "advance"}))
            await recv_phase(ws, "instructions")
            await ws.send(json.dumps({"type": "advance"}))
            await recv_phase(ws, "playing")
    print("ok: all four difficulties reach playing")

    seed = next(s for s in range(200) if plan_run(config, s, "super_easy")[1] is Phase.GAME_FINISHED)
    keys, _ = plan_run(config, seed, "super_easy")
    async with websockets.connect(uri) as ws:
        await ws.send(json.dumps({"type": "start", "difficulty": "super_easy", "seed": seed}))
        await recv_phase(ws, "splash")
        await ws.send(json.dumps({"type": "advance"}))
        await recv_phase(ws, "instructions")
        await ws.send(json.dumps({"type": "advance"}))
        frame = await recv_phase(ws, "playing")
        tick = frame["tick"]
        done = False
        for key in keys:
            await ws.send(json.dumps({"type": "input", "dir": key}))
            while not done:
                frame = json.loads(await ws.recv())
                if frame.get("type") != "state":
                    continue
                seen_phases.add(frame["phase"])
                if frame["phase"] == "finished_level":
                    await ws.send(json.dumps({"type": "advance"}))
                    frame = await recv_phase(ws, "playing")
                    tick = frame["tick"]
                    break
                if frame["phase"] == "finished_game":
                    done = True
                elif frame["phase"] == "playing" and frame["tick"] > tick:
                    tick = frame["tick"]
                    break
            if done:
                break
        assert done, f"planned run did not finish; saw {sorted(seen_phases)}"
        await ws.send(json.dumps({"type": "restart"}))
        await recv_phase(ws, "splash")
    print(f"ok: seed {seed} cleared every level, restarted to splash")

    async with websockets.connect(uri) as ws:
        await ws.send(json.dumps({"type": "start", "difficulty": "difficult", "seed": 2}))
        await ws.send(json.dumps({"type": "advance"}))
        await ws.send(json.dumps({"type": "advance"}))
        await recv_phase(ws, "game_over")
    print("ok: devoured on difficult")


def main() -> int:
    port = int(sys.argv[1]) if len(sys.argv) > 1 else 8942
    config, _ = resolve_config(parse_properties(PROPS))
    with tempfile.NamedTemporaryFile("w", suffix=".properties", delete=False) as fp:
        fp.write(PROPS)
        props_path = fp.name
    server = subprocess.Popen(
        [sys.executable, "-m", "labyrinth.cli", "serve", "--port", str(port),
         "--config", props_path, "--tick-rate", "60"],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        for _ in range(50):
            try:
                urllib.request.urlopen(f"http://127.0.0.1:{port}/config", timeout=1)
                break
            except OSError:
                time.sleep(0.2)
        else:
            print("server never came up", file=sys.stderr)
            return 1
        asyncio.run(drive(port, config))
    finally:
        server.terminate()
        server.wait(timeout=10)
    missing = REQUIRED - seen_phases
    if missing:
        print(f"missing phases: {sorted(missing)}", file=sys.stderr)
        return 1
    print(f"live loop ok — phases seen: {sorted(seen_phases)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

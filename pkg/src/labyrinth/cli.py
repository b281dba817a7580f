"""Command-line front door: gen, sim, replay, serve.

Thin argument handling over the library; `serve` hands the FastAPI app to
uvicorn. Exit codes: 0 ok, 1 usage, 2 config/validation, 3 replay-digest
mismatch.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from .brain import BRAIN_KINDS
from .errors import LabyrinthError, ReplayDigestMismatch
from .mazegen import MazeSpec, generate_maze
from .properties import DEFAULT_PROPERTIES_PATH, GameConfig, default_config, load_properties_file, resolve_config
from .render import render_text
from .replay import parse_replay, run_replay, verify_replay
from .sensing import DIFFICULTY_ORDER
from .simulate import HERO_POLICIES, run_batch

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_DIGEST = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for config problems
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="labyrinth", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a maze")
    gen.add_argument("--width", type=int, required=True)
    gen.add_argument("--height", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--render", action="store_true", help="print the maze as text")

    sim = sub.add_parser("sim", help="run a headless batch simulation")
    sim.add_argument("--brain", choices=BRAIN_KINDS, required=True)
    sim.add_argument("--hero", choices=HERO_POLICIES, required=True)
    sim.add_argument("--difficulty", choices=DIFFICULTY_ORDER, required=True)
    sim.add_argument("--episodes", type=int, required=True)
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--csv", metavar="OUT", help="write per-episode records to a CSV file")
    sim.add_argument("--config", metavar="FILE", help="properties file")

    rep = sub.add_parser("replay", help="inspect or verify a replay file")
    rep.add_argument("--file", required=True)
    rep.add_argument("--verify", action="store_true", help="re-run and compare the digest")
    rep.add_argument("--config", metavar="FILE", help="properties file")

    srv = sub.add_parser("serve", help="host the session server")
    srv.add_argument("--port", type=int, required=True)
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--config", metavar="FILE", help="properties file")
    srv.add_argument("--tick-rate", type=float, default=8.0)

    return parser


def _load_config(path: str | None) -> GameConfig:
    if path is None:
        if os.path.exists(DEFAULT_PROPERTIES_PATH):
            path = DEFAULT_PROPERTIES_PATH
        else:
            return default_config()
    config, warnings = resolve_config(load_properties_file(path))
    for key in warnings:
        print(f"warning: unknown property {key!r}", file=sys.stderr)
    return config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ReplayDigestMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIGEST
    except (LabyrinthError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def _dispatch(args) -> int:
    if args.command == "gen":
        maze = generate_maze(MazeSpec(args.width, args.height, args.seed))
        print(
            json.dumps(
                {
                    "width": maze.width,
                    "height": maze.height,
                    "seed": args.seed,
                    "exit": [maze.exit_cell.col, maze.exit_cell.row, maze.exit_side.value],
                    "hero_start": [maze.hero_start.col, maze.hero_start.row],
                    "monster_start": [maze.monster_start.col, maze.monster_start.row],
                }
            )
        )
        if args.render:
            print(render_text(maze, hero=maze.hero_start, monster=maze.monster_start), end="")
        return EXIT_OK

    if args.command == "sim":
        config = _load_config(args.config)
        stats = run_batch(config, args.difficulty, args.brain, args.hero, args.episodes, args.seed)
        print(
            json.dumps(
                {
                    "episodes": stats.episodes,
                    "captures": stats.captures,
                    "escapes": stats.escapes,
                    "capture_rate": round(stats.capture_rate, 4),
                    "mean_ticks": round(stats.mean_ticks, 2),
                }
            )
        )
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as fp:
                fp.write(stats.to_csv())
        return EXIT_OK

    if args.command == "replay":
        config = _load_config(args.config)
        with open(args.file, encoding="utf-8") as fp:
            text = fp.read()
        if args.verify:
            digest = verify_replay(config, text)
            print(f"ok {digest}")
        else:
            rf = parse_replay(text)
            final = run_replay(
                dataclasses.replace(config, max_level=rf.levels),
                rf.seed,
                list(rf.entries),
                rf.difficulty,
            )
            print(
                json.dumps(
                    {
                        "seed": rf.seed,
                        "difficulty": rf.difficulty,
                        "levels": rf.levels,
                        "inputs": len(rf.entries),
                        "final_phase": final.phase.value,
                        "final_tick": final.tick,
                    }
                )
            )
        return EXIT_OK

    # serve
    import uvicorn

    from .service import create_app

    config = _load_config(args.config)
    frontend = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__)))), "frontend", "dist")
    app = create_app(config, tick_rate=args.tick_rate, static_dir=frontend)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

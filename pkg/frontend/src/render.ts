/**
 * Pure scene construction: ScreenModel in, draw list out. The canvas layer
 * only executes scenes, so tests can assert exactly what would be drawn.
 */

import { ScreenModel } from "./model.js";
import { DIFFICULTIES, Difficulty } from "./protocol.js";

export interface BoardCell {
  col: number;
  row: number;
  mask: number; // wall bits N=1 E=2 S=4 W=8
}

export interface BoardScene {
  kind: "board";
  level: number;
  tick: number;
  cells: BoardCell[];
  hero: [number, number];
  monster: [number, number] | null;
  monsterSprite: string;
  growl: boolean;
}

export interface PanelScene {
  kind: "panel";
  panel:
    | "splash"
    | "instructions"
    | "finished_level"
    | "game_over"
    | "finished_game"
    | "connecting"
    | "disconnected";
  title: string;
  lines: string[];
  picker: { options: readonly Difficulty[]; selected: Difficulty } | null;
}

export type Scene = BoardScene | PanelScene;

const PANEL_TEXT: Record<string, [string, string[]]> = {
  connecting: ["Connecting…", ["Waiting for the session server"]],
  disconnected: ["Connection lost", ["Reconnecting…"]],
  splash: ["LABYRINTH", ["A torch, a maze, and something growling in the dark.", "Press Enter"]],
  finished_level: ["Level complete!", ["You found the way out.", "Press Enter for the next level"]],
  game_over: ["Devoured.", ["The monster caught you.", "Press Enter to try again"]],
  finished_game: ["You escaped!", ["Every level cleared. The torch survives another day.", "Press Enter to play again"]],
};

export function renderScene(model: ScreenModel): Scene {
  if (model.connection !== "open") {
    return panel(model.connection === "closed" ? "disconnected" : "connecting", model);
  }
  const state = model.state;
  if (state === null) {
    return panel("connecting", model);
  }
  if (state.phase === "playing") {
    return {
      kind: "board",
      level: state.level,
      tick: state.tick,
      // exactly the server's visible list: nothing else is ever drawn
      cells: state.visible.map(([col, row, mask]) => ({ col, row, mask })),
      hero: state.hero,
      monster: state.monster,
      monsterSprite: state.sprite,
      growl: state.heard || (model.growlTick !== null && state.tick - model.growlTick < 8),
    };
  }
  if (state.phase === "instructions") {
    return {
      kind: "panel",
      panel: "instructions",
      title: "How to play",
      lines: [
        "Arrow keys move the hero through the maze.",
        "Find the gap in the outer wall and escape each level.",
        "The torch only lights a small circle; listen for growls.",
        "Pick a difficulty, then press Enter.",
      ],
      picker: { options: DIFFICULTIES, selected: model.selection },
    };
  }
  return panel(state.phase, model);
}

function panel(name: PanelScene["panel"], model: ScreenModel): PanelScene {
  const [title, lines] = PANEL_TEXT[name];
  const extra = model.lastError ? [...lines, `server: ${model.lastError}`] : lines;
  return { kind: "panel", panel: name, title, lines: extra, picker: null };
}

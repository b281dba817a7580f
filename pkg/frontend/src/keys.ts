/**
 * Keyboard-to-protocol mapping: arrows move, Enter/Space advances screens
 * (or restarts from a terminal screen). Everything else maps to nothing.
 */

import { ClientMessage, PhaseToken } from "./protocol.js";

const ARROWS: Record<string, "N" | "S" | "W" | "E"> = {
  ArrowUp: "N",
  ArrowDown: "S",
  ArrowLeft: "W",
  ArrowRight: "E",
};

export function keyToMessage(key: string, phase: PhaseToken): ClientMessage | null {
  const dir = ARROWS[key];
  if (dir !== undefined) {
    return { type: "input", dir };
  }
  if (key === "Enter" || key === " " || key === "Space") {
    if (phase === "game_over" || phase === "finished_game") {
      return { type: "restart" };
    }
    return { type: "advance" };
  }
  return null;
}

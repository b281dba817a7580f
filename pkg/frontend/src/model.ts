/**
 * The client's entire state. Rendering is a pure function of this model;
 * nothing about the maze is cached beyond the latest state message, so the
 * client cannot know (or draw) unseen cells.
 */

import { Difficulty, DIFFICULTIES, ServerMessage, StateMessage } from "./protocol.js";

export type ConnectionStatus = "connecting" | "open" | "closed";

export interface ScreenModel {
  connection: ConnectionStatus;
  state: StateMessage | null;
  /** difficulty highlighted in the instructions picker */
  selection: Difficulty;
  /** difficulty the current session was started with */
  started: Difficulty;
  lastError: string | null;
  /** ticks of recent growls, for a fading indicator */
  growlTick: number | null;
}

export function initialModel(selection: Difficulty = "medium"): ScreenModel {
  return {
    connection: "connecting",
    state: null,
    selection,
    started: selection,
    lastError: null,
    growlTick: null,
  };
}

export function onServerMessage(model: ScreenModel, msg: ServerMessage): ScreenModel {
  if (msg.type === "error") {
    return { ...model, lastError: msg.msg };
  }
  const heardNow = msg.heard || msg.events.some((e) => e.kind === "growl");
  return {
    ...model,
    state: msg,
    lastError: null,
    growlTick: heardNow ? msg.tick : model.growlTick,
  };
}

export function onConnection(model: ScreenModel, status: ConnectionStatus): ScreenModel {
  if (status !== "open") {
    // the server owns all truth: a drop leaves us with no session at all
    return { ...initialModel(model.selection), connection: status };
  }
  return { ...model, connection: status, state: null, started: model.selection };
}

export function moveSelection(model: ScreenModel, delta: -1 | 1): ScreenModel {
  const i = DIFFICULTIES.indexOf(model.selection);
  const next = Math.min(DIFFICULTIES.length - 1, Math.max(0, i + delta));
  return { ...model, selection: DIFFICULTIES[next] };
}

export function phaseOf(model: ScreenModel): string {
  if (model.connection !== "open") return "disconnected";
  if (model.state === null) return "connecting";
  return model.state.phase;
}

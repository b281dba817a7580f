/**
 * Wire protocol types shared with the session server, plus grammar guards.
 * The client may only ever send start / input / advance / restart.
 */

export type PhaseToken =
  | "splash"
  | "instructions"
  | "playing"
  | "finished_level"
  | "game_over"
  | "finished_game";

export const PHASES: PhaseToken[] = [
  "splash",
  "instructions",
  "playing",
  "finished_level",
  "game_over",
  "finished_game",
];

export const DIFFICULTIES = ["super_easy", "easy", "medium", "difficult"] as const;
export type Difficulty = (typeof DIFFICULTIES)[number];

export type DirToken = "N" | "E" | "S" | "W";

export interface GameEventMessage {
  kind: string;
  tick: number;
  pos: [number, number] | null;
  dir: DirToken | null;
}

export interface StateMessage {
  type: "state";
  phase: PhaseToken;
  tick: number;
  level: number;
  hero: [number, number];
  visible: [number, number, number][]; // col, row, wallmask (N1 E2 S4 W8)
  monster: [number, number] | null;
  heard: boolean;
  sprite: string;
  events: GameEventMessage[];
}

export interface ErrorMessage {
  type: "error";
  msg: string;
}

export type ServerMessage = StateMessage | ErrorMessage;

export type ClientMessage =
  | { type: "start"; difficulty: Difficulty; seed: number }
  | { type: "input"; dir: DirToken }
  | { type: "advance" }
  | { type: "restart" };

/** True iff the message fits the protocol grammar exactly. */
export function validOutbound(msg: ClientMessage): boolean {
  switch (msg.type) {
    case "start":
      return (
        (DIFFICULTIES as readonly string[]).includes(msg.difficulty) &&
        Number.isInteger(msg.seed) &&
        msg.seed >= 0
      );
    case "input":
      return msg.dir === "N" || msg.dir === "E" || msg.dir === "S" || msg.dir === "W";
    case "advance":
    case "restart":
      return Object.keys(msg).length === 1;
    default:
      return false;
  }
}

export function parseServerMessage(raw: string): ServerMessage | null {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch {
    return null;
  }
  if (typeof data !== "object" || data === null) return null;
  const msg = data as Record<string, unknown>;
  if (msg.type === "error" && typeof msg.msg === "string") {
    return { type: "error", msg: msg.msg };
  }
  if (msg.type === "state" && PHASES.includes(msg.phase as PhaseToken)) {
    return msg as unknown as StateMessage;
  }
  return null;
}

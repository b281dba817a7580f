import { describe, expect, it } from "vitest";

import { initialModel, moveSelection, onConnection, onServerMessage } from "../src/model.js";
import { StateMessage } from "../src/protocol.js";
import { renderScene } from "../src/render.js";

function stateMsg(overrides: Partial<StateMessage> = {}): StateMessage {
  return {
    type: "state",
    phase: "playing",
    tick: 0,
    level: 1,
    hero: [1, 1],
    visible: [
      [1, 1, 0],
      [0, 1, 9],
      [2, 1, 3],
      [1, 0, 11],
      [1, 2, 12],
    ],
    monster: null,
    heard: false,
    sprite: "monster.s.0",
    events: [],
    ...overrides,
  };
}

function openModel() {
  return onConnection(initialModel(), "open");
}

describe("renderScene", () => {
  it("draws exactly the visible cells, nothing else", () => {
    const model = onServerMessage(openModel(), stateMsg());
    const scene = renderScene(model);
    expect(scene.kind).toBe("board");
    if (scene.kind !== "board") return;
    expect(scene.cells.map((c) => [c.col, c.row, c.mask])).toEqual(stateMsg().visible);
  });

  it("shows the monster only when the server sent one", () => {
    const hidden = renderScene(onServerMessage(openModel(), stateMsg()));
    expect(hidden.kind === "board" && hidden.monster).toBeNull();
    const shown = renderScene(onServerMessage(openModel(), stateMsg({ monster: [2, 1] })));
    expect(shown.kind === "board" && shown.monster).toEqual([2, 1]);
  });

  it("raises the growl indicator without a monster sprite", () => {
    const scene = renderScene(onServerMessage(openModel(), stateMsg({ heard: true })));
    expect(scene.kind).toBe("board");
    if (scene.kind !== "board") return;
    expect(scene.growl).toBe(true);
    expect(scene.monster).toBeNull();
  });

  it("shows phase panels for every non-playing phase", () => {
    const panels: Record<string, string> = {
      splash: "splash",
      instructions: "instructions",
      finished_level: "finished_level",
      game_over: "game_over",
      finished_game: "finished_game",
    };
    for (const [phase, panel] of Object.entries(panels)) {
      const scene = renderScene(
        onServerMessage(openModel(), stateMsg({ phase: phase as StateMessage["phase"] })),
      );
      expect(scene.kind).toBe("panel");
      if (scene.kind === "panel") expect(scene.panel).toBe(panel);
    }
  });

  it("puts the difficulty picker on the instructions panel", () => {
    let model = onServerMessage(openModel(), stateMsg({ phase: "instructions" }));
    model = moveSelection(model, 1);
    const scene = renderScene(model);
    expect(scene.kind).toBe("panel");
    if (scene.kind !== "panel") return;
    expect(scene.picker).not.toBeNull();
    expect(scene.picker!.selected).toBe("difficult");
  });

  it("renders connection panels when the socket is down", () => {
    const closed = renderScene(onConnection(initialModel(), "closed"));
    expect(closed.kind === "panel" && closed.panel).toBe("disconnected");
    const fresh = renderScene(initialModel());
    expect(fresh.kind === "panel" && fresh.panel).toBe("connecting");
  });

  it("drops all session state on reconnect", () => {
    let model = onServerMessage(openModel(), stateMsg());
    model = onConnection(model, "closed");
    expect(model.state).toBeNull();
    model = onConnection(model, "open");
    expect(model.state).toBeNull(); // back to the splash flow; server is truth
  });
});

/**
 * Wiring: one websocket, one keyboard listener, one render loop, all
 * funnelling through a single model. The server owns time and truth; this
 * file only forwards inputs and draws the latest snapshot.
 */

import { drawScene, SpriteStore } from "./canvas.js";
import { keyToMessage } from "./keys.js";
import {
  initialModel,
  moveSelection,
  onConnection,
  onServerMessage,
  ScreenModel,
} from "./model.js";
import { ClientMessage, parseServerMessage, validOutbound } from "./protocol.js";
import { renderScene } from "./render.js";

const canvas = document.getElementById("game") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const sprites = new SpriteStore();

let model: ScreenModel = initialModel();
let socket: WebSocket | null = null;
const seed = (Math.random() * 2 ** 32) >>> 0;

function send(msg: ClientMessage): void {
  if (socket === null || socket.readyState !== WebSocket.OPEN) return;
  if (!validOutbound(msg)) return;
  socket.send(JSON.stringify(msg));
}

function startSession(): void {
  model = { ...model, started: model.selection };
  send({ type: "start", difficulty: model.selection, seed });
}

function connect(): void {
  const proto = location.protocol === "https:" ? "wss:" : "ws:";
  socket = new WebSocket(`${proto}//${location.host}/ws`);
  socket.onopen = () => {
    update(onConnection(model, "open"));
    startSession();
  };
  socket.onmessage = (event) => {
    const msg = parseServerMessage(String(event.data));
    if (msg !== null) update(onServerMessage(model, msg));
  };
  socket.onclose = () => {
    update(onConnection(model, "closed"));
    setTimeout(connect, 1000); // re-enters at the splash screen
  };
}

function update(next: ScreenModel): void {
  model = next;
  drawScene(ctx, renderScene(model), sprites);
}

window.addEventListener("keydown", (event) => {
  const phase = model.state?.phase;
  if (phase === undefined) return;
  if (phase === "instructions") {
    // the picker is client-side state; confirming may restart with a new difficulty
    if (event.key === "ArrowUp") {
      update(moveSelection(model, -1));
      return;
    }
    if (event.key === "ArrowDown") {
      update(moveSelection(model, 1));
      return;
    }
    if (event.key === "Enter" || event.key === " ") {
      if (model.selection !== model.started) {
        startSession();
        send({ type: "advance" }); // splash -> instructions
      }
      send({ type: "advance" }); // instructions -> playing
      event.preventDefault();
      return;
    }
  }
  const msg = keyToMessage(event.key, phase);
  if (msg !== null) {
    send(msg);
    event.preventDefault();
  }
});

function resize(): void {
  canvas.width = window.innerWidth;
  canvas.height = window.innerHeight;
  drawScene(ctx, renderScene(model), sprites);
}

window.addEventListener("resize", resize);

fetch("/config")
  .then((r) => r.json())
  .then((config) => sprites.load(config.resource_map ?? {}))
  .catch(() => undefined);

resize();
connect();

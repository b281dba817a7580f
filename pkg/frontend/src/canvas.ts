/**
 * Canvas executor for scenes. Sprites resolve through the server's resource
 * map when the referenced images exist; otherwise simple placeholder shapes
 * keep the game playable, so swapping art stays a properties-file exercise.
 */

import { BoardScene, PanelScene, Scene } from "./render.js";

const CELL = 48;
const WALL = 4;

export class SpriteStore {
  private images = new Map<string, HTMLImageElement>();

  load(resourceMap: Record<string, string>): void {
    for (const [key, path] of Object.entries(resourceMap)) {
      if (!key.startsWith("image.")) continue;
      const img = new Image();
      img.src = path;
      img.onload = () => this.images.set(key.slice("image.".length), img);
    }
  }

  get(name: string): HTMLImageElement | null {
    return this.images.get(name) ?? null;
  }
}

export function drawScene(
  ctx: CanvasRenderingContext2D,
  scene: Scene,
  sprites: SpriteStore,
): void {
  const { width, height } = ctx.canvas;
  ctx.fillStyle = "#0b0b10";
  ctx.fillRect(0, 0, width, height);
  if (scene.kind === "panel") {
    drawPanel(ctx, scene);
  } else {
    drawBoard(ctx, scene, sprites);
  }
}

function drawPanel(ctx: CanvasRenderingContext2D, scene: PanelScene): void {
  const { width, height } = ctx.canvas;
  ctx.textAlign = "center";
  ctx.fillStyle = "#e8b44a";
  ctx.font = "bold 42px system-ui, sans-serif";
  ctx.fillText(scene.title, width / 2, height / 3);
  ctx.fillStyle = "#cfcfe0";
  ctx.font = "18px system-ui, sans-serif";
  scene.lines.forEach((line, i) => {
    ctx.fillText(line, width / 2, height / 3 + 50 + i * 28);
  });
  if (scene.picker) {
    const baseY = height / 3 + 70 + scene.lines.length * 28;
    scene.picker.options.forEach((option, i) => {
      const selected = option === scene.picker!.selected;
      ctx.fillStyle = selected ? "#e8b44a" : "#8888a0";
      ctx.font = selected ? "bold 22px system-ui, sans-serif" : "20px system-ui, sans-serif";
      ctx.fillText(`${selected ? "▸ " : ""}${option.replace("_", " ")}`, width / 2, baseY + i * 30);
    });
  }
}

function drawBoard(
  ctx: CanvasRenderingContext2D,
  scene: BoardScene,
  sprites: SpriteStore,
): void {
  const { width, height } = ctx.canvas;
  const [hc, hr] = scene.hero;
  const ox = width / 2 - (hc + 0.5) * CELL;
  const oy = height / 2 - (hr + 0.5) * CELL;

  for (const cell of scene.cells) {
    const x = ox + cell.col * CELL;
    const y = oy + cell.row * CELL;
    // torch-lit floor, brighter near the hero
    const d = Math.hypot(cell.col - hc, cell.row - hr);
    const glow = Math.max(0.25, 1 - d / 6);
    ctx.fillStyle = `rgba(214, 160, 96, ${0.28 * glow})`;
    ctx.fillRect(x, y, CELL, CELL);
    ctx.fillStyle = "#6b5640";
    if (cell.mask & 1) ctx.fillRect(x, y, CELL, WALL);
    if (cell.mask & 2) ctx.fillRect(x + CELL - WALL, y, WALL, CELL);
    if (cell.mask & 4) ctx.fillRect(x, y + CELL - WALL, CELL, WALL);
    if (cell.mask & 8) ctx.fillRect(x, y, WALL, CELL);
  }

  if (scene.monster !== null) {
    const [mc, mr] = scene.monster;
    const img = sprites.get(scene.monsterSprite);
    if (img) {
      ctx.drawImage(img, ox + mc * CELL + 4, oy + mr * CELL + 4, CELL - 8, CELL - 8);
    } else {
      ctx.fillStyle = "#c2403a";
      ctx.beginPath();
      ctx.moveTo(ox + (mc + 0.5) * CELL, oy + mr * CELL + 6);
      ctx.lineTo(ox + mc * CELL + 8, oy + (mr + 1) * CELL - 6);
      ctx.lineTo(ox + (mc + 1) * CELL - 8, oy + (mr + 1) * CELL - 6);
      ctx.closePath();
      ctx.fill();
    }
  }

  const heroImg = sprites.get("hero");
  if (heroImg) {
    ctx.drawImage(heroImg, ox + hc * CELL + 4, oy + hr * CELL + 4, CELL - 8, CELL - 8);
  } else {
    ctx.fillStyle = "#e8d44a";
    ctx.beginPath();
    ctx.arc(ox + (hc + 0.5) * CELL, oy + (hr + 0.5) * CELL, CELL / 3, 0, Math.PI * 2);
    ctx.fill();
  }

  ctx.textAlign = "left";
  ctx.fillStyle = "#cfcfe0";
  ctx.font = "16px system-ui, sans-serif";
  ctx.fillText(`level ${scene.level}`, 12, 24);
  if (scene.growl) {
    ctx.fillStyle = "#c2403a";
    ctx.font = "bold 20px system-ui, sans-serif";
    ctx.fillText("grrrr…", 12, 52);
  }
}

/** Immediate-mode canvas renderer for one scene.
 *
 * Takes the 2D-context subset it actually uses, so tests can pass a
 * recording fake and the browser passes a real CanvasRenderingContext2D.
 */

import { worldToScreen, type Viewport } from "./camera.js";
import type { Circle, PositionMap } from "./timeline.js";
import type { EdgeRole } from "./types.js";

export interface Canvas2DLike {
  globalAlpha: number;
  // unions match CanvasRenderingContext2D so a real context is assignable
  strokeStyle: string | CanvasGradient | CanvasPattern;
  fillStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
}

export interface SceneEdge {
  a: number;
  b: number;
  opacity: number;
  role: EdgeRole;
}

export interface Scene {
  positions: PositionMap;
  edges: SceneEdge[];
  circles?: Circle[];
  trajectories?: [number, number][][];
  labels?: Map<number, string>;
  selection?: number | null;
}

export const NODE_RADIUS_PX = 4;

const BACKGROUND = "#fdfdfd";
const NODE_FILL = "#1f3a5f";
const SELECTION_RING = "#e67e22";
const CIRCLE_STROKE = "#8e7cc3";
const TRAJECTORY_STROKE = "#b0b8c4";
const LABEL_BOX = "#ffffff";
const LABEL_BORDER = "#555555";
const LABEL_TEXT = "#111111";
const LABEL_FONT = "11px sans-serif";

const EDGE_COLORS: Record<EdgeRole, string> = {
  shared: "#2f2f2f",
  "old-only": "#c0392b",
  "new-only": "#1f7a4d",
};

function line(ctx: Canvas2DLike, a: [number, number], b: [number, number]): void {
  ctx.beginPath();
  ctx.moveTo(a[0], a[1]);
  ctx.lineTo(b[0], b[1]);
  ctx.stroke();
}

export function renderScene(ctx: Canvas2DLike, view: Viewport, scene: Scene): void {
  ctx.globalAlpha = 1;
  ctx.clearRect(0, 0, view.width, view.height);
  ctx.fillStyle = BACKGROUND;
  ctx.fillRect(0, 0, view.width, view.height);

  if (scene.circles) {
    ctx.globalAlpha = 0.35;
    ctx.strokeStyle = CIRCLE_STROKE;
    ctx.lineWidth = 1;
    for (const circle of scene.circles) {
      const [sx, sy] = worldToScreen(view, circle.center);
      ctx.beginPath();
      ctx.arc(sx, sy, circle.radius * view.camera.scale, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }

  if (scene.trajectories) {
    ctx.globalAlpha = 0.5;
    ctx.strokeStyle = TRAJECTORY_STROKE;
    ctx.lineWidth = 1;
    for (const path of scene.trajectories) {
      if (path.length < 2) continue;
      ctx.beginPath();
      const [sx, sy] = worldToScreen(view, path[0]);
      ctx.moveTo(sx, sy);
      for (let i = 1; i < path.length; i += 1) {
        const [px, py] = worldToScreen(view, path[i]);
        ctx.lineTo(px, py);
      }
      ctx.stroke();
    }
  }

  ctx.lineWidth = 1.5;
  for (const edge of scene.edges) {
    if (edge.opacity <= 0) continue;
    const pa = scene.positions.get(edge.a);
    const pb = scene.positions.get(edge.b);
    if (!pa || !pb) continue;
    ctx.globalAlpha = Math.min(1, edge.opacity);
    ctx.strokeStyle = EDGE_COLORS[edge.role];
    line(ctx, worldToScreen(view, pa), worldToScreen(view, pb));
  }

  ctx.globalAlpha = 1;
  for (const [id, p] of scene.positions) {
    const [sx, sy] = worldToScreen(view, p);
    ctx.fillStyle = NODE_FILL;
    ctx.beginPath();
    ctx.arc(sx, sy, NODE_RADIUS_PX, 0, 2 * Math.PI);
    ctx.fill();
    if (scene.selection === id) {
      ctx.strokeStyle = SELECTION_RING;
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.arc(sx, sy, NODE_RADIUS_PX + 3, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.lineWidth = 1.5;
    }
  }

  if (scene.labels) {
    ctx.font = LABEL_FONT;
    for (const [id, text] of scene.labels) {
      const p = scene.positions.get(id);
      if (!p) continue;
      const [sx, sy] = worldToScreen(view, p);
      // boxed label; width from a fixed per-character estimate so the
      // renderer stays measureText-free
      const w = 6.6 * text.length + 6;
      const h = 14;
      const bx = sx + NODE_RADIUS_PX + 2;
      const by = sy - h - 2;
      ctx.globalAlpha = 0.9;
      ctx.fillStyle = LABEL_BOX;
      ctx.fillRect(bx, by, w, h);
      ctx.globalAlpha = 1;
      ctx.strokeStyle = LABEL_BORDER;
      ctx.lineWidth = 1;
      ctx.strokeRect(bx, by, w, h);
      ctx.fillStyle = LABEL_TEXT;
      ctx.fillText(text, bx + 3, by + 11);
    }
  }

  ctx.globalAlpha = 1;
}

/** Pan/zoom camera between world (drawing) and screen (canvas pixel) space.
 *
 * World y grows upward, screen y downward. The camera never touches
 * geometry; it only maps coordinates.
 */

import type { PositionMap } from "./timeline.js";

export interface Camera {
  /** World point shown at the canvas center. */
  cx: number;
  cy: number;
  /** Pixels per world unit. */
  scale: number;
}

export interface Viewport {
  width: number;
  height: number;
  camera: Camera;
}

export const HIT_RADIUS_PX = 8;

export function worldToScreen(
  view: Viewport,
  p: [number, number],
): [number, number] {
  const { width, height, camera } = view;
  return [
    width / 2 + (p[0] - camera.cx) * camera.scale,
    height / 2 - (p[1] - camera.cy) * camera.scale,
  ];
}

export function screenToWorld(
  view: Viewport,
  p: [number, number],
): [number, number] {
  const { width, height, camera } = view;
  return [
    camera.cx + (p[0] - width / 2) / camera.scale,
    camera.cy - (p[1] - height / 2) / camera.scale,
  ];
}

/** Drag by screen pixels: the viewed world region moves with the pointer. */
export function pan(camera: Camera, dxPx: number, dyPx: number): Camera {
  return {
    cx: camera.cx - dxPx / camera.scale,
    cy: camera.cy + dyPx / camera.scale,
    scale: camera.scale,
  };
}

/** Rescale around a screen point, keeping the world point under it fixed. */
export function zoomAt(
  view: Viewport,
  screenPt: [number, number],
  factor: number,
): Camera {
  const anchor = screenToWorld(view, screenPt);
  const scale = view.camera.scale * factor;
  return {
    cx: anchor[0] - (screenPt[0] - view.width / 2) / scale,
    cy: anchor[1] + (screenPt[1] - view.height / 2) / scale,
    scale,
  };
}

/** Default zoom: center the drawing's bounds and fit them inside a margin.
 *
 * Spans are floored at one world unit so a single node keeps a sane scale.
 */
export function fitCamera(
  positions: Iterable<[number, number]>,
  width: number,
  height: number,
  marginPx = 24,
): Camera {
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const [x, y] of positions) {
    minX = Math.min(minX, x);
    minY = Math.min(minY, y);
    maxX = Math.max(maxX, x);
    maxY = Math.max(maxY, y);
  }
  if (minX > maxX) return { cx: 0, cy: 0, scale: 1 };
  const spanX = Math.max(maxX - minX, 1.0);
  const spanY = Math.max(maxY - minY, 1.0);
  const usableX = Math.max(width - 2 * marginPx, 1);
  const usableY = Math.max(height - 2 * marginPx, 1);
  return {
    cx: (minX + maxX) / 2,
    cy: (minY + maxY) / 2,
    scale: Math.min(usableX / spanX, usableY / spanY),
  };
}

/** Nearest node within the hit radius, or null; ties keep the lowest id. */
export function hitTest(
  positions: PositionMap,
  view: Viewport,
  screenPt: [number, number],
  radiusPx = HIT_RADIUS_PX,
): number | null {
  let best: number | null = null;
  let bestDist = Infinity;
  for (const [id, p] of positions) {
    const [sx, sy] = worldToScreen(view, p);
    const dist = Math.hypot(sx - screenPt[0], sy - screenPt[1]);
    if (dist <= radiusPx && dist < bestDist) {
      best = id;
      bestDist = dist;
    }
  }
  return best;
}

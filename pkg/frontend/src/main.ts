/** Browser bootstrap: wire a canvas and a few controls to the app. */

import { ExplorerApp } from "./app.js";
import type { Toggles } from "./app.js";
import type { CreateSessionSpec } from "./types.js";

export interface MountOptions {
  spec?: CreateSessionSpec;
  durationMs?: number;
}

export function mount(
  canvas: HTMLCanvasElement,
  baseUrl: string,
  opts: MountOptions = {},
): ExplorerApp {
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas has no 2d context");
  const app = new ExplorerApp(ctx, canvas.width, canvas.height, baseUrl, {
    durationMs: opts.durationMs,
    now: () => performance.now(),
    requestFrame: (cb) => requestAnimationFrame(() => cb()),
  });

  const toScreen = (ev: MouseEvent): [number, number] => {
    const rect = canvas.getBoundingClientRect();
    return [
      ((ev.clientX - rect.left) / rect.width) * canvas.width,
      ((ev.clientY - rect.top) / rect.height) * canvas.height,
    ];
  };

  let dragFrom: [number, number] | null = null;
  let dragged = false;

  canvas.addEventListener("mousedown", (ev) => {
    dragFrom = toScreen(ev);
    dragged = false;
  });
  canvas.addEventListener("mousemove", (ev) => {
    if (!dragFrom) return;
    const here = toScreen(ev);
    const dx = here[0] - dragFrom[0];
    const dy = here[1] - dragFrom[1];
    if (Math.abs(dx) + Math.abs(dy) > 2) dragged = true;
    if (dragged) {
      app.panBy(dx, dy);
      dragFrom = here;
    }
  });
  canvas.addEventListener("mouseup", (ev) => {
    const wasDrag = dragged;
    dragFrom = null;
    dragged = false;
    if (!wasDrag) app.handleClick(toScreen(ev));
  });
  canvas.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    app.zoomBy(toScreen(ev), ev.deltaY < 0 ? 1.15 : 1 / 1.15);
  });

  const keyToggles: Record<string, keyof Toggles> = {
    c: "circles",
    e: "nonTreeEdges",
    t: "trajectories",
    l: "labels",
  };
  window.addEventListener("keydown", (ev) => {
    const name = keyToggles[ev.key];
    if (name) app.setToggle(name, !app.toggles[name]);
  });

  void app.start(opts.spec ?? { n: 40, p: 0.1, seed: 7 }).catch((err) => {
    app.lastError = err instanceof Error ? err.message : String(err);
  });
  return app;
}

/** Playback math over a parsed transition timeline.
 *
 * Frames carry their own non-uniform time stamps (the server's easing
 * schedule); playback maps a wall-clock fraction straight onto timeline t
 * and interpolates between the bracketing frames, so the easing baked into
 * the frame spacing is preserved.
 */

import type { DrawingPayload, Timeline, TimelineFrame } from "./types.js";

export type PositionMap = Map<number, [number, number]>;

export function parsePositions(payload: DrawingPayload | TimelineFrame): PositionMap {
  const out: PositionMap = new Map();
  for (const [key, value] of Object.entries(payload.positions)) {
    out.set(Number(key), [value[0], value[1]]);
  }
  return out;
}

function bracket(tl: Timeline, t: number): [number, number, number] {
  const frames = tl.frames;
  let lo = 0;
  while (lo + 1 < frames.length && frames[lo + 1].t <= t) lo += 1;
  if (lo + 1 >= frames.length) return [lo, lo, 0];
  const span = frames[lo + 1].t - frames[lo].t;
  return [lo, lo + 1, (t - frames[lo].t) / span];
}

/** Node positions at playback position t; endpoints are returned bit-exact. */
export function positionsAt(tl: Timeline, t: number): PositionMap {
  const frames = tl.frames;
  if (t <= frames[0].t) return parsePositions(frames[0]);
  if (t >= frames[frames.length - 1].t) return parsePositions(frames[frames.length - 1]);
  const [i, j, w] = bracket(tl, t);
  const a = frames[i].positions;
  const b = frames[j].positions;
  const out: PositionMap = new Map();
  for (const key of Object.keys(a)) {
    const [x0, y0] = a[key];
    const [x1, y1] = b[key];
    out.set(Number(key), [(1 - w) * x0 + w * x1, (1 - w) * y0 + w * y1]);
  }
  return out;
}

/** Per-edge opacity at playback position t, aligned with tl.edges. */
export function opacitiesAt(tl: Timeline, t: number): number[] {
  const frames = tl.frames;
  if (t <= frames[0].t) return tl.edges.map((e) => e.opacity[0]);
  if (t >= frames[frames.length - 1].t) {
    return tl.edges.map((e) => e.opacity[frames.length - 1]);
  }
  const [i, j, w] = bracket(tl, t);
  return tl.edges.map((e) => (1 - w) * e.opacity[i] + w * e.opacity[j]);
}

/** One polyline per node through its sampled frame positions. */
export function trajectoriesOf(tl: Timeline): Map<number, [number, number][]> {
  const out = new Map<number, [number, number][]>();
  for (const key of Object.keys(tl.frames[0].positions)) {
    out.set(
      Number(key),
      tl.frames.map((f) => [f.positions[key][0], f.positions[key][1]]),
    );
  }
  return out;
}

export interface TreeShape {
  root: number;
  parent: Map<number, number>;
  children: Map<number, number[]>;
}

/** Parent/child structure of a tree edge set, rooted at the given node.
 *
 * Parenthood in a tree is independent of traversal order; breadth-first
 * with ascending neighbors just makes child lists deterministic.
 */
export function treeFromEdges(edges: [number, number][], root: number): TreeShape {
  const adjacency = new Map<number, number[]>();
  for (const [a, b] of edges) {
    if (!adjacency.has(a)) adjacency.set(a, []);
    if (!adjacency.has(b)) adjacency.set(b, []);
    adjacency.get(a)!.push(b);
    adjacency.get(b)!.push(a);
  }
  for (const neighbors of adjacency.values()) neighbors.sort((x, y) => x - y);

  const parent = new Map<number, number>();
  const children = new Map<number, number[]>();
  children.set(root, []);
  const queue: number[] = [root];
  const seen = new Set<number>([root]);
  while (queue.length > 0) {
    const v = queue.shift()!;
    for (const w of adjacency.get(v) ?? []) {
      if (seen.has(w)) continue;
      seen.add(w);
      parent.set(w, v);
      children.get(v)!.push(w);
      children.set(w, []);
      queue.push(w);
    }
  }
  return { root, parent, children };
}

export interface Circle {
  center: [number, number];
  radius: number;
}

/** Containment circle per non-leaf node: centered on it, through its children.
 *
 * Children of one node share a radius by construction; the mean guards
 * against serialization rounding.
 */
export function containmentCircles(positions: PositionMap, tree: TreeShape): Circle[] {
  const out: Circle[] = [];
  for (const [v, kids] of tree.children) {
    if (kids.length === 0) continue;
    const center = positions.get(v);
    if (!center) continue;
    let total = 0;
    let counted = 0;
    for (const k of kids) {
      const p = positions.get(k);
      if (!p) continue;
      total += Math.hypot(p[0] - center[0], p[1] - center[1]);
      counted += 1;
    }
    if (counted > 0) {
      out.push({ center, radius: total / counted });
    }
  }
  return out;
}

/** Explorer application: one session, click-to-reroot, animated playback.
 *
 * Geometry always comes from server frames; the app only schedules playback
 * and maps coordinates through the camera. Clicks landing during a
 * transition are queued and run in order once it finishes.
 */

import { ApiError, ExplorerApi, type FetchLike } from "./api.js";
import {
  fitCamera,
  hitTest,
  pan,
  worldToScreen,
  zoomAt,
  type Camera,
  type Viewport,
} from "./camera.js";
import { renderScene, type Canvas2DLike, type Scene, type SceneEdge } from "./renderer.js";
import {
  containmentCircles,
  opacitiesAt,
  parsePositions,
  positionsAt,
  trajectoriesOf,
  treeFromEdges,
  type PositionMap,
  type TreeShape,
} from "./timeline.js";
import type {
  CreateSessionSpec,
  RerootOverrides,
  SessionState,
  Timeline,
} from "./types.js";

export interface Toggles {
  circles: boolean;
  nonTreeEdges: boolean;
  trajectories: boolean;
  labels: boolean;
}

export interface AppOptions {
  /** Wall-clock length of one transition playback. */
  durationMs?: number;
  /** Clock and frame scheduler, injectable for deterministic tests. */
  now?: () => number;
  requestFrame?: (cb: () => void) => void;
  fetchFn?: FetchLike;
}

export type FrameListener = (t: number, edges: SceneEdge[]) => void;

const DEFAULT_DURATION_MS = 1500;

export class ExplorerApp {
  readonly api: ExplorerApi;
  camera: Camera = { cx: 0, cy: 0, scale: 1 };
  toggles: Toggles = {
    circles: false,
    nonTreeEdges: true,
    trajectories: false,
    labels: false,
  };
  rerootOverrides: RerootOverrides = {};
  session: SessionState | null = null;
  /** Committed geometry: the last server frame, bit-exact. */
  displayed: PositionMap = new Map();
  displayedEdges: SceneEdge[] = [];
  root: number | null = null;
  selection: number | null = null;
  lastError: string | null = null;
  /** Observer of every playback frame; used by scripted tests. */
  onFrame: FrameListener | null = null;

  private readonly ctx: Canvas2DLike;
  private readonly width: number;
  private readonly height: number;
  private readonly durationMs: number;
  private readonly now: () => number;
  private readonly schedule: (cb: () => void) => void;
  private tree: TreeShape | null = null;
  private lastTl: Timeline | null = null;
  private queue: number[] = [];
  private busyFlag = false;
  private work: Promise<void> = Promise.resolve();
  /** What is on screen right now; tracks playback frames mid-flight. */
  private visible: PositionMap = new Map();

  constructor(
    ctx: Canvas2DLike,
    width: number,
    height: number,
    baseUrl: string,
    opts: AppOptions = {},
  ) {
    this.ctx = ctx;
    this.width = width;
    this.height = height;
    this.durationMs = opts.durationMs ?? DEFAULT_DURATION_MS;
    this.now = opts.now ?? (() => Date.now());
    this.schedule =
      opts.requestFrame ?? ((cb) => setTimeout(cb, 16) as unknown as void);
    this.api = new ExplorerApi(baseUrl, opts.fetchFn);
  }

  get busy(): boolean {
    return this.busyFlag;
  }

  get queuedClicks(): number {
    return this.queue.length;
  }

  get lastTimeline(): Timeline | null {
    return this.lastTl;
  }

  /** Resolves once the current transition and all queued clicks finished. */
  settled(): Promise<void> {
    return this.work;
  }

  async start(spec: CreateSessionSpec): Promise<SessionState> {
    const session = await this.api.createSession(spec);
    this.session = session;
    this.displayed = parsePositions(session.drawing);
    this.visible = this.displayed;
    this.displayedEdges = session.edges.map(([a, b]) => ({
      a,
      b,
      opacity: 1,
      role: "shared" as const,
    }));
    this.camera = fitCamera(this.displayed.values(), this.width, this.height);
    this.root = null;
    this.tree = null;
    this.selection = null;
    this.lastTl = null;
    this.render();
    return session;
  }

  /** Hit-test a canvas click against the on-screen positions; reroot (or
   * queue, while a transition plays) on a node hit. */
  handleClick(screenPt: [number, number]): number | null {
    const node = hitTest(this.visible, this.view(), screenPt);
    if (node !== null) this.requestReroot(node);
    return node;
  }

  requestReroot(node: number): void {
    if (this.busyFlag) {
      this.queue.push(node);
      return;
    }
    this.busyFlag = true;
    this.work = (async () => {
      let next: number | undefined = node;
      while (next !== undefined) {
        try {
          await this.runTransition(next);
        } catch (err) {
          // non-modal error surface; the session stays usable
          this.lastError =
            err instanceof ApiError
              ? `${err.status}: ${err.message}`
              : err instanceof Error
                ? err.message
                : String(err);
        }
        next = this.queue.shift();
      }
    })().finally(() => {
      this.busyFlag = false;
      this.render();
    });
  }

  screenPositionOf(node: number): [number, number] | null {
    const p = this.displayed.get(node);
    return p ? worldToScreen(this.view(), p) : null;
  }

  setToggle(name: keyof Toggles, value: boolean): void {
    this.toggles[name] = value;
    this.render();
  }

  panBy(dxPx: number, dyPx: number): void {
    this.camera = pan(this.camera, dxPx, dyPx);
    this.render();
  }

  zoomBy(screenPt: [number, number], factor: number): void {
    this.camera = zoomAt(this.view(), screenPt, factor);
    this.render();
  }

  render(): void {
    renderScene(this.ctx, this.view(), this.staticScene());
  }

  private view(): Viewport {
    return { width: this.width, height: this.height, camera: this.camera };
  }

  private async runTransition(node: number): Promise<void> {
    const session = this.session;
    if (!session) throw new Error("no active session");
    const tl = await this.api.reroot(session.id, node, this.rerootOverrides);
    this.lastTl = tl;
    const surviving = tl.edges.filter((e) => e.role !== "old-only");
    const tree = treeFromEdges(
      surviving.map((e) => e.nodes),
      node,
    );
    this.selection = node;
    await this.playback(tl, tree);
    const final = tl.frames[tl.frames.length - 1];
    this.displayed = parsePositions(final);
    this.visible = this.displayed;
    this.displayedEdges = surviving.map((e) => ({
      a: e.nodes[0],
      b: e.nodes[1],
      opacity: 1,
      role: "shared" as const,
    }));
    this.root = node;
    this.tree = tree;
    this.render();
  }

  private playback(tl: Timeline, tree: TreeShape): Promise<void> {
    const start = this.now();
    return new Promise((resolve) => {
      const step = (): void => {
        const u =
          this.durationMs <= 0
            ? 1
            : Math.min(1, (this.now() - start) / this.durationMs);
        const scene = this.playbackScene(tl, u, tree);
        this.visible = scene.positions;
        renderScene(this.ctx, this.view(), scene);
        this.onFrame?.(u, scene.edges);
        if (u >= 1) {
          resolve();
          return;
        }
        this.schedule(step);
      };
      step();
    });
  }

  private playbackScene(tl: Timeline, t: number, tree: TreeShape): Scene {
    const positions = positionsAt(tl, t);
    const ops = opacitiesAt(tl, t);
    const edges: SceneEdge[] = [];
    for (let i = 0; i < tl.edges.length; i += 1) {
      const e = tl.edges[i];
      if (!this.toggles.nonTreeEdges && e.role === "old-only") continue;
      edges.push({ a: e.nodes[0], b: e.nodes[1], opacity: ops[i], role: e.role });
    }
    return {
      positions,
      edges,
      circles: this.toggles.circles ? containmentCircles(positions, tree) : undefined,
      trajectories: this.toggles.trajectories
        ? [...trajectoriesOf(tl).values()]
        : undefined,
      labels: this.toggles.labels ? this.labelMap() : undefined,
      selection: this.selection,
    };
  }

  private staticScene(): Scene {
    return {
      positions: this.displayed,
      edges: this.displayedEdges,
      circles:
        this.toggles.circles && this.tree
          ? containmentCircles(this.displayed, this.tree)
          : undefined,
      labels: this.toggles.labels ? this.labelMap() : undefined,
      selection: this.selection,
    };
  }

  private labelMap(): Map<number, string> {
    const out = new Map<number, string>();
    for (const node of this.session?.graph.nodes ?? []) {
      out.set(node.id, node.label ?? String(node.id));
    }
    return out;
  }
}

/** Wire formats of the session server, mirrored field for field. */

export interface GraphNode {
  id: number;
  label?: string;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: [number, number][];
}

export interface DrawingPayload {
  positions: Record<string, [number, number]>;
}

export interface SessionParams {
  steps: number;
  root_radius: number;
  phi: number;
  fade_out_window: [number, number];
  fade_in_at_end: boolean;
}

export interface SessionState {
  id: string;
  graph: GraphPayload;
  drawing: DrawingPayload;
  edges: [number, number][];
  params: SessionParams;
}

export type EdgeRole = "shared" | "old-only" | "new-only";

export interface TimelineEdge {
  nodes: [number, number];
  role: EdgeRole;
  /** One opacity value per frame, aligned with Timeline.frames. */
  opacity: number[];
}

export interface TimelineFrame {
  t: number;
  positions: Record<string, [number, number]>;
}

export interface Timeline {
  edges: TimelineEdge[];
  frames: TimelineFrame[];
}

export interface GeneratorSpec {
  n: number;
  p?: number;
  p_edge?: number;
  seed?: number;
}

export type CreateSessionSpec = GeneratorSpec | GraphPayload;

export interface RerootOverrides {
  steps?: number;
  root_radius?: number;
  phi?: number;
}

export { ApiError, ExplorerApi, parseTimeline, type FetchLike } from "./api.js";
export {
  ExplorerApp,
  type AppOptions,
  type FrameListener,
  type Toggles,
} from "./app.js";
export {
  fitCamera,
  hitTest,
  pan,
  screenToWorld,
  worldToScreen,
  zoomAt,
  HIT_RADIUS_PX,
  type Camera,
  type Viewport,
} from "./camera.js";
export {
  renderScene,
  NODE_RADIUS_PX,
  type Canvas2DLike,
  type Scene,
  type SceneEdge,
} from "./renderer.js";
export {
  containmentCircles,
  opacitiesAt,
  parsePositions,
  positionsAt,
  trajectoriesOf,
  treeFromEdges,
  type Circle,
  type PositionMap,
  type TreeShape,
} from "./timeline.js";
export type {
  CreateSessionSpec,
  DrawingPayload,
  EdgeRole,
  GeneratorSpec,
  GraphNode,
  GraphPayload,
  RerootOverrides,
  SessionParams,
  SessionState,
  Timeline,
  TimelineEdge,
  TimelineFrame,
} from "./types.js";

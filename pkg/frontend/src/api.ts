/** Typed client for the session server endpoints. */

import type {
  CreateSessionSpec,
  RerootOverrides,
  SessionState,
  Timeline,
  TimelineEdge,
  TimelineFrame,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function errorDetail(res: Response): Promise<string> {
  try {
    const body: unknown = await res.json();
    if (body && typeof body === "object" && "detail" in body) {
      const detail = (body as { detail: unknown }).detail;
      if (typeof detail === "string") return detail;
    }
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return res.statusText || `HTTP ${res.status}`;
}

/** Parse the newline-delimited transition stream: header line, then frames. */
export function parseTimeline(text: string): Timeline {
  const lines = text.split("\n").filter((line) => line.trim() !== "");
  if (lines.length < 3) {
    throw new Error("timeline stream needs a header and two frames");
  }
  const header: unknown = JSON.parse(lines[0]);
  if (
    !header ||
    typeof header !== "object" ||
    !Array.isArray((header as { edges?: unknown }).edges)
  ) {
    throw new Error("timeline header needs an 'edges' list");
  }
  const edges = (header as { edges: TimelineEdge[] }).edges;
  const frames: TimelineFrame[] = lines.slice(1).map((line) => {
    const record: unknown = JSON.parse(line);
    if (
      !record ||
      typeof record !== "object" ||
      typeof (record as { t?: unknown }).t !== "number" ||
      typeof (record as { positions?: unknown }).positions !== "object"
    ) {
      throw new Error("malformed frame record");
    }
    return record as TimelineFrame;
  });
  if (frames[0].t !== 0 || frames[frames.length - 1].t !== 1) {
    throw new Error("timeline must span t=0 to t=1");
  }
  for (const edge of edges) {
    if (!Array.isArray(edge.opacity) || edge.opacity.length !== frames.length) {
      throw new Error("each edge needs one opacity value per frame");
    }
  }
  return { edges, frames };
}

export class ExplorerApi {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const res = await this.fetchFn(this.baseUrl + path, init);
    if (!res.ok) {
      throw new ApiError(res.status, await errorDetail(res));
    }
    return res;
  }

  private post(path: string, payload: unknown): Promise<Response> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  async createSession(spec: CreateSessionSpec): Promise<SessionState> {
    const res = await this.post("/sessions", spec);
    return (await res.json()) as SessionState;
  }

  async getState(id: string): Promise<SessionState> {
    const res = await this.request(`/sessions/${id}`);
    return (await res.json()) as SessionState;
  }

  async reroot(
    id: string,
    node: number,
    overrides: RerootOverrides = {},
  ): Promise<Timeline> {
    const res = await this.post(`/sessions/${id}/reroot`, { node, ...overrides });
    return parseTimeline(await res.text());
  }

  async getTimeline(id: string): Promise<Timeline> {
    const res = await this.request(`/sessions/${id}/timeline`);
    return parseTimeline(await res.text());
  }

  async deleteSession(id: string): Promise<void> {
    await this.request(`/sessions/${id}`, { method: "DELETE" });
  }
}

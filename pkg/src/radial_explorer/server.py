"""HTTP session server for interactive exploration.

A session holds one connected graph plus the drawing currently on screen.
Re-rooting runs the animated transition, streams its frames, and commits
the final frame as the next starting drawing, so consecutive transitions
chain exactly.

Endpoints:
  POST   /sessions                  create from a graph payload or a
                                    {n, p_edge, seed} generator spec
  GET    /sessions/{id}             current graph + drawing + params
  POST   /sessions/{id}/reroot      run a transition, stream ndjson frames
  GET    /sessions/{id}/timeline    re-stream the last transition
  DELETE /sessions/{id}             drop the session

Sessions live in memory and expire after 30 idle minutes by default.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response, StreamingResponse

from .animation import AnimationParams, animate, force_directed_layout
from .coords import Drawing, drawing_to_json
from .graph import (
    DisconnectedGraphError,
    Edge,
    Graph,
    GraphError,
    RootedTree,
    generate_random_graph,
    graph_from_json,
    graph_to_json,
)
from .layout_pc import LayoutParams

DEFAULT_IDLE_SECONDS = 30.0 * 60.0
_NDJSON = "application/x-ndjson"


@dataclass
class Session:
    id: str
    graph: Graph
    drawing: Drawing
    displayed_edges: tuple[Edge, ...]
    params: AnimationParams
    tree: RootedTree | None = None
    last_timeline: str | None = None
    last_used: float = 0.0
    busy: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)


def _params_json(p: AnimationParams) -> dict:
    return {
        "steps": p.steps,
        "root_radius": p.layout.root_radius,
        "phi": p.layout.arc_angle,
        "fade_out_window": list(p.fade_out_window),
        "fade_in_at_end": p.fade_in_at_end,
    }


def _session_json(s: Session) -> dict:
    return {
        "id": s.id,
        "graph": graph_to_json(s.graph),
        "drawing": drawing_to_json(s.drawing),
        "edges": [list(e) for e in s.displayed_edges],
        "params": _params_json(s.params),
    }


def _build_graph(payload: dict) -> tuple[Graph, int]:
    """Graph plus the seed for its initial layout.

    A payload with a ``nodes`` key is the graph file format; otherwise it
    must be a generator spec {n, p_edge|p, seed}.
    """
    if "nodes" in payload:
        return graph_from_json(payload), 0
    if "n" in payload:
        n = payload.get("n")
        p_edge = payload.get("p_edge", payload.get("p", 0.1))
        seed = payload.get("seed", 0)
        if not isinstance(n, int) or not isinstance(p_edge, (int, float)) \
                or not isinstance(seed, int):
            raise GraphError("generator spec needs integer n, numeric p_edge, integer seed")
        return generate_random_graph(n, float(p_edge), seed), seed
    raise GraphError("payload must be a graph ({nodes, edges}) or a generator spec ({n, ...})")


def _override_params(base: AnimationParams, payload: dict) -> AnimationParams:
    steps = payload.get("steps", base.steps)
    radius = payload.get("root_radius", base.layout.root_radius)
    phi = payload.get("phi", base.layout.arc_angle)
    if not isinstance(steps, int) or not isinstance(radius, (int, float)) \
            or not isinstance(phi, (int, float)):
        raise GraphError("parameter overrides must be numeric")
    return AnimationParams(
        steps=steps,
        layout=LayoutParams(root_radius=float(radius), arc_angle=float(phi)),
        fade_out_window=base.fade_out_window,
        fade_in_at_end=base.fade_in_at_end,
    )


def _stream_lines(text: str):
    for line in text.splitlines(keepends=True):
        yield line.encode()


def create_app(
    *,
    idle_seconds: float = DEFAULT_IDLE_SECONDS,
    clock=time.monotonic,
) -> FastAPI:
    app = FastAPI(title="radial-explorer session server")
    # browser clients are served from a different origin than the API
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    store_lock = threading.Lock()

    def sweep() -> None:
        now = clock()
        with store_lock:
            stale = [sid for sid, s in sessions.items()
                     if now - s.last_used > idle_seconds and not s.busy]
            for sid in stale:
                del sessions[sid]

    def get_session(sid: str) -> Session:
        sweep()
        with store_lock:
            s = sessions.get(sid)
            if s is None:
                raise HTTPException(404, f"unknown session {sid}")
            s.last_used = clock()
            return s

    async def read_body(request: Request) -> dict:
        try:
            payload = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(400, "request body is not valid JSON") from None
        if not isinstance(payload, dict):
            raise HTTPException(400, "request body must be a JSON object")
        return payload

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request) -> dict:
        sweep()
        payload = await read_body(request)
        try:
            graph, seed = _build_graph(payload)
        except DisconnectedGraphError as exc:
            raise HTTPException(422, str(exc)) from exc
        except GraphError as exc:
            raise HTTPException(400, str(exc)) from exc
        session = Session(
            id=uuid.uuid4().hex,
            graph=graph,
            drawing=force_directed_layout(graph, seed=seed),
            displayed_edges=graph.sorted_edges,
            params=AnimationParams(),
            last_used=clock(),
        )
        with store_lock:
            sessions[session.id] = session
        return _session_json(session)

    @app.get("/sessions/{sid}")
    async def get_state(sid: str) -> dict:
        return _session_json(get_session(sid))

    @app.post("/sessions/{sid}/reroot")
    async def reroot(sid: str, request: Request) -> StreamingResponse:
        session = get_session(sid)
        payload = await read_body(request)
        node = payload.get("node")
        if not isinstance(node, int):
            raise HTTPException(400, "reroot payload needs an integer 'node'")
        if not 0 <= node < session.graph.node_count:
            raise HTTPException(404, f"unknown node {node}")
        try:
            params = _override_params(session.params, payload)
        except GraphError as exc:
            raise HTTPException(400, str(exc)) from exc

        if not session.lock.acquire(blocking=False):
            raise HTTPException(409, "a transition is already in flight")
        try:
            if session.busy:
                raise HTTPException(409, "a transition is already in flight")
            session.busy = True
        finally:
            session.lock.release()

        try:
            # computed off the event loop so other sessions stay responsive
            # and a concurrent reroot on this one sees the in-flight flag
            timeline = await run_in_threadpool(
                lambda: animate(
                    session.graph, session.drawing, node, params,
                    old_edges=session.displayed_edges,
                )
            )
            text = timeline.to_jsonl()
            with session.lock:
                session.drawing = timeline.final_drawing
                session.tree = timeline.evaluator.tree
                session.displayed_edges = timeline.evaluator.tree.edges()
                session.last_timeline = text
                session.last_used = clock()
        finally:
            with session.lock:
                session.busy = False
        return StreamingResponse(_stream_lines(text), media_type=_NDJSON)

    @app.get("/sessions/{sid}/timeline")
    async def get_timeline(sid: str) -> StreamingResponse:
        session = get_session(sid)
        if session.last_timeline is None:
            raise HTTPException(404, "session has no transition yet")
        return StreamingResponse(_stream_lines(session.last_timeline), media_type=_NDJSON)

    @app.delete("/sessions/{sid}", status_code=204)
    async def delete_session(sid: str) -> Response:
        get_session(sid)
        with store_lock:
            sessions.pop(sid, None)
        return Response(status_code=204)

    return app


def main() -> None:
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=8000, log_level="warning")


if __name__ == "__main__":
    main()

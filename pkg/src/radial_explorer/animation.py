"""Animated re-rooting transitions in the parent-centered model.

A transition interpolates each node's polar coordinate inside its new
parent's frame: the root slides straight toward the drawing origin while
every other node blends angle and radius between its representation of
the old drawing and its place in the new static layout. Frame times come
from a cosine slow-in/slow-out schedule. The module also provides the
force-directed layout used as the very first drawing of a session.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .coords import (
    DEGENERATE_FRAME_EPS,
    Drawing,
    ParentCenteredModel,
    PolarCoord,
    drawing_from_json,
    from_drawing,
    to_drawing,
)
from .graph import Edge, Graph, GraphError, RootedTree, bfs_spanning_tree, normalize_edge
from .layout_pc import LayoutParams, static_layout

TWO_PI = 2.0 * math.pi

ROLE_SHARED = "shared"
ROLE_OLD_ONLY = "old-only"
ROLE_NEW_ONLY = "new-only"

SPRING_REST_LENGTH = 100.0
_SPRING_ATTRACT = 2.0
_SPRING_REPEL = SPRING_REST_LENGTH**2
_SPRING_STEP = 5.0
_SPRING_MAX_MOVE = SPRING_REST_LENGTH / 2.0


@dataclass(frozen=True)
class AnimationParams:
    """Transition controls: p intermediate frames plus both endpoints."""

    steps: int = 30
    layout: LayoutParams = field(default_factory=LayoutParams)
    fade_out_window: tuple[float, float] = (0.0, 0.3)
    fade_in_at_end: bool = True

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise GraphError(f"steps must be >= 1, got {self.steps}")
        lo, hi = self.fade_out_window
        if not (0.0 <= lo < hi <= 1.0):
            raise GraphError(f"fade window must nest in [0, 1], got {self.fade_out_window}")


@dataclass(frozen=True)
class Timeline:
    """Ordered frames of one transition plus per-edge display bookkeeping.

    ``edge_opacity[k]`` aligns with ``frames[k]``. The evaluator re-creates
    node positions at arbitrary times for crossing analysis; it lives only
    in memory and never round-trips through serialization.
    """

    frames: tuple[tuple[float, Drawing], ...]
    edge_roles: dict[Edge, str]
    edge_opacity: tuple[dict[Edge, float], ...]
    evaluator: object | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.frames) < 2:
            raise GraphError("a timeline needs at least the two endpoint frames")
        ts = [t for t, _ in self.frames]
        if ts[0] != 0.0 or ts[-1] != 1.0:
            raise GraphError("timeline must span t=0 to t=1")
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise GraphError("frame times must increase strictly")
        if len(self.edge_opacity) != len(self.frames):
            raise GraphError("one opacity record per frame required")
        for per_frame in self.edge_opacity:
            if set(per_frame) != set(self.edge_roles):
                raise GraphError("opacity records must cover exactly the role'd edges")

    @property
    def final_drawing(self) -> Drawing:
        return self.frames[-1][1]

    def to_jsonl(self) -> str:
        header = {
            "edges": [
                {
                    "nodes": list(edge),
                    "role": self.edge_roles[edge],
                    "opacity": [op[edge] for op in self.edge_opacity],
                }
                for edge in sorted(self.edge_roles)
            ]
        }
        lines = [json.dumps(header, separators=(",", ":"))]
        for t, drawing in self.frames:
            record = {
                "t": t,
                "positions": {str(v): [x, y] for v, (x, y) in sorted(drawing.positions.items())},
            }
            lines.append(json.dumps(record, separators=(",", ":")))
        return "\n".join(lines) + "\n"


def timeline_from_jsonl(text: str) -> Timeline:
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) < 3:
        raise GraphError("timeline stream needs a header and two frames")
    try:
        header = json.loads(lines[0])
        records = [json.loads(line) for line in lines[1:]]
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed timeline JSON: {exc}") from exc
    if not isinstance(header, dict) or not isinstance(header.get("edges"), list):
        raise GraphError("timeline header needs an 'edges' list")
    roles: dict[Edge, str] = {}
    opacity_curves: dict[Edge, list[float]] = {}
    for item in header["edges"]:
        nodes = item.get("nodes")
        if not isinstance(nodes, list) or len(nodes) != 2:
            raise GraphError(f"malformed edge entry {item!r}")
        edge = normalize_edge(nodes[0], nodes[1])
        roles[edge] = item["role"]
        opacity_curves[edge] = [float(x) for x in item["opacity"]]
    frames = []
    for record in records:
        if not isinstance(record, dict) or "t" not in record:
            raise GraphError("frame records need a 't' field")
        frames.append((float(record["t"]), drawing_from_json(record)))
    opacity = tuple(
        {edge: curve[k] for edge, curve in opacity_curves.items()}
        for k in range(len(frames))
    )
    return Timeline(tuple(frames), roles, opacity)


def ease_schedule(p: int) -> list[float]:
    """Cosine slow-in/slow-out times: p intermediates between exact 0 and 1."""
    if p < 1:
        raise GraphError(f"need at least one intermediate frame, got {p}")
    return [(1.0 - math.cos(math.pi * k / (p + 1))) / 2.0 for k in range(p + 2)]


def _shortest_route(theta_old: float, theta_new: float) -> float:
    """theta_old shifted by a whole number of turns to lie within pi of theta_new."""
    return theta_old + TWO_PI * round((theta_new - theta_old) / TWO_PI)


def frame_at(
    m_old: ParentCenteredModel,
    m_new: ParentCenteredModel,
    t_tree: RootedTree,
    t: float,
) -> Drawing:
    """One interpolated frame: root rides its ray inward, others blend polar."""
    if m_old.tree != t_tree or m_new.tree != t_tree:
        raise GraphError("both models must reference the transition tree")
    coords: dict[int, PolarCoord] = {}
    root = t_tree.root
    theta0, r0 = m_old.coords[root]
    coords[root] = PolarCoord(theta0, (1.0 - t) * r0)
    for v in t_tree.depth:
        if v == root:
            continue
        theta_old, r_old = m_old.coords[v]
        theta_new, r_new = m_new.coords[v]
        theta_old = _shortest_route(theta_old, theta_new)
        coords[v] = PolarCoord(
            t * theta_new + (1.0 - t) * theta_old,
            t * r_new + (1.0 - t) * r_old,
        )
    return to_drawing(ParentCenteredModel(coords, t_tree))


class TransitionEvaluator:
    """Vectorized positions-at-time for one parent-centered transition.

    Mirrors frame_at/to_drawing arithmetic over a whole vector of times at
    once: angles and radii interpolate per node, then one breadth-first pass
    rebuilds Cartesian positions, carrying each frame's zero-direction as a
    unit vector instead of an angle.
    """

    def __init__(
        self,
        m_old: ParentCenteredModel,
        m_new: ParentCenteredModel,
        tree: RootedTree,
    ) -> None:
        self.tree = tree
        self.node_order = list(tree.iter_breadth_first())
        self._index = {v: i for i, v in enumerate(self.node_order)}
        n = len(self.node_order)
        self._theta_old = np.empty(n)
        self._theta_new = np.empty(n)
        self._r_old = np.empty(n)
        self._r_new = np.empty(n)
        for i, v in enumerate(self.node_order):
            theta_old, r_old = m_old.coords[v]
            theta_new, r_new = m_new.coords[v]
            if v != tree.root:
                theta_old = _shortest_route(theta_old, theta_new)
            self._theta_old[i] = theta_old
            self._theta_new[i] = theta_new
            self._r_old[i] = r_old
            self._r_new[i] = r_new

    def positions_at(self, ts: np.ndarray) -> np.ndarray:
        """Positions for every node at every time; shape (nodes, times, 2)."""
        ts = np.asarray(ts, dtype=float)
        n = len(self.node_order)
        s = ts.shape[0]
        theta = self._theta_new[:, None] * ts[None, :] + self._theta_old[:, None] * (1.0 - ts)[None, :]
        radius = self._r_new[:, None] * ts[None, :] + self._r_old[:, None] * (1.0 - ts)[None, :]
        root_i = self._index[self.tree.root]
        theta[root_i] = self._theta_old[root_i]
        radius[root_i] = (1.0 - ts) * self._r_old[root_i]

        pos = np.empty((n, s, 2))
        frame_dir = np.empty((n, s, 2))
        pos[root_i, :, 0] = radius[root_i] * np.cos(theta[root_i])
        pos[root_i, :, 1] = radius[root_i] * np.sin(theta[root_i])
        frame_dir[root_i] = (1.0, 0.0)
        for v in self.node_order:
            if v == self.tree.root:
                continue
            i = self._index[v]
            p = self.tree.parent[v]
            pi = self._index[p]
            if p == self.tree.root:
                fv = np.broadcast_to((1.0, 0.0), (s, 2))
            else:
                gi = self._index[self.tree.parent[p]]
                u = pos[gi] - pos[pi]
                norm = np.hypot(u[:, 0], u[:, 1])
                unit = u / np.maximum(norm, DEGENERATE_FRAME_EPS)[:, None]
                fv = np.where((norm < DEGENERATE_FRAME_EPS)[:, None], frame_dir[pi], unit)
            frame_dir[i] = fv
            ct = np.cos(theta[i])
            st = np.sin(theta[i])
            pos[i, :, 0] = pos[pi, :, 0] + radius[i] * (fv[:, 0] * ct - fv[:, 1] * st)
            pos[i, :, 1] = pos[pi, :, 1] + radius[i] * (fv[:, 0] * st + fv[:, 1] * ct)
        return pos


def classify_edges(old_edges: object, new_edges: object) -> dict[Edge, str]:
    """Role per displayed edge: kept, fading out, or revealed at the end."""
    old = frozenset(normalize_edge(a, b) for a, b in old_edges)
    new = frozenset(normalize_edge(a, b) for a, b in new_edges)
    roles: dict[Edge, str] = {}
    for edge in old | new:
        if edge in old and edge in new:
            roles[edge] = ROLE_SHARED
        elif edge in old:
            roles[edge] = ROLE_OLD_ONLY
        else:
            roles[edge] = ROLE_NEW_ONLY
    return roles


def _opacity_at(role: str, t: float, is_final: bool, params: AnimationParams) -> float:
    if role == ROLE_SHARED:
        return 1.0
    if role == ROLE_OLD_ONLY:
        lo, hi = params.fade_out_window
        return 1.0 - min(1.0, max(0.0, (t - lo) / (hi - lo)))
    if is_final and params.fade_in_at_end:
        return 1.0
    return 0.0


def _build_timeline(
    frames: list[tuple[float, Drawing]],
    roles: dict[Edge, str],
    params: AnimationParams,
    evaluator: object,
) -> Timeline:
    last = len(frames) - 1
    opacity = tuple(
        {edge: _opacity_at(role, t, k == last, params) for edge, role in roles.items()}
        for k, (t, _) in enumerate(frames)
    )
    return Timeline(tuple(frames), roles, opacity, evaluator)


def animate_tree(
    d_old: Drawing,
    tree: RootedTree,
    params: AnimationParams | None = None,
    old_edges: object | None = None,
) -> Timeline:
    """Animate from d_old to the fresh parent-centered layout of ``tree``.

    The tree decides the frame hierarchy; it may be a breadth-first tree of
    some graph or a re-rooted copy of an earlier one. ``old_edges`` names
    the edges on display in d_old (defaults to the tree's own edges).
    """
    params = params or AnimationParams()
    missing = set(tree.depth) - set(d_old.positions)
    if missing:
        raise GraphError(f"old drawing lacks positions for nodes {sorted(missing)}")
    m_new = static_layout(tree, params.layout)
    m_old = from_drawing(d_old, tree)
    displayed_old = (
        tree.edges()
        if old_edges is None
        else [normalize_edge(a, b) for a, b in old_edges]
    )
    roles = classify_edges(displayed_old, tree.edges())
    frames = [(t, frame_at(m_old, m_new, tree, t)) for t in ease_schedule(params.steps)]
    evaluator = TransitionEvaluator(m_old, m_new, tree)
    return _build_timeline(frames, roles, params, evaluator)


def animate(
    g: Graph,
    d_old: Drawing,
    new_root: int,
    params: AnimationParams | None = None,
    old_edges: object | None = None,
) -> Timeline:
    """Re-root g at new_root and animate from d_old to the fresh layout.

    ``old_edges`` names the edges on display in d_old; a freshly opened
    session shows the whole graph, while a drawing that came out of an
    earlier transition shows only that transition's tree edges. Defaults
    to all graph edges.
    """
    missing = set(range(g.node_count)) - set(d_old.positions)
    if missing:
        raise GraphError(f"old drawing lacks positions for nodes {sorted(missing)}")
    tree = bfs_spanning_tree(g, new_root)
    displayed_old = g.sorted_edges if old_edges is None else old_edges
    return animate_tree(d_old, tree, params, displayed_old)


def force_directed_layout(g: Graph, iterations: int = 1000, seed: int = 0) -> Drawing:
    """Spring embedder used for a session's opening drawing.

    Edges pull with a logarithmic spring toward a fixed rest length and
    non-adjacent pairs push apart with an inverse-square force; every step
    is displacement-clamped, so positions stay finite for any iteration
    count. Deterministic per seed.
    """
    if iterations < 0:
        raise GraphError(f"iterations must be >= 0, got {iterations}")
    n = g.node_count
    rng = np.random.default_rng(seed)
    pos = rng.uniform(-SPRING_REST_LENGTH, SPRING_REST_LENGTH, size=(n, 2))
    if n == 1:
        return Drawing({0: (float(pos[0, 0]), float(pos[0, 1]))})

    adjacent = np.zeros((n, n), dtype=bool)
    for a, b in g.edges:
        adjacent[a, b] = adjacent[b, a] = True
    nonadjacent = ~adjacent & ~np.eye(n, dtype=bool)

    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.hypot(delta[..., 0], delta[..., 1])
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        unit = delta / dist[..., None]

        pull = _SPRING_ATTRACT * np.log(dist / SPRING_REST_LENGTH)
        force = -(pull * adjacent)[..., None] * unit
        force += (_SPRING_REPEL / dist**2 * nonadjacent)[..., None] * unit
        step = _SPRING_STEP * force.sum(axis=1)
        length = np.hypot(step[:, 0], step[:, 1])
        too_far = length > _SPRING_MAX_MOVE
        step[too_far] *= (_SPRING_MAX_MOVE / length[too_far])[:, None]
        pos += step

    return Drawing({v: (float(pos[v, 0]), float(pos[v, 1])) for v in range(n)})

"""Root-centered baseline: concentric rings with leaf-weighted sectors.

Nodes of depth d sit on the circle of radius d * ring_spacing around the
root; each subtree owns an angular sector sized by its leaf count, nested
inside its parent's sector. Transitions linearly interpolate every node's
polar coordinates about the drawing origin, after rigidly rotating the
target so the new root's edge toward its former parent keeps the direction
it had on screen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .animation import (
    AnimationParams,
    Timeline,
    _build_timeline,
    classify_edges,
    ease_schedule,
)
from .coords import Drawing
from .graph import Edge, GraphError, RootedTree, normalize_edge

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class YeeParams:
    ring_spacing: float = 100.0
    steps: int = 32  # total frame count including both endpoints

    def __post_init__(self) -> None:
        if not (self.ring_spacing > 0 and math.isfinite(self.ring_spacing)):
            raise GraphError(f"ring_spacing must be positive, got {self.ring_spacing}")
        if self.steps < 2:
            raise GraphError(f"steps must be >= 2, got {self.steps}")


def subtree_leaf_counts(t: RootedTree) -> dict[int, int]:
    """Leaves under each node; a leaf counts itself as 1."""
    counts: dict[int, int] = {}
    for v in reversed(list(t.iter_breadth_first())):
        kids = t.children[v]
        counts[v] = sum(counts[k] for k in kids) if kids else 1
    return counts


def subtree_sectors(t: RootedTree) -> dict[int, tuple[float, float]]:
    """(start angle, width) per node; the root owns the whole turn.

    Children split their parent's sector in stored order, each slice
    proportional to its subtree leaf count, so sibling sectors are disjoint
    and nest exactly inside the parent's.
    """
    leaves = subtree_leaf_counts(t)
    sectors: dict[int, tuple[float, float]] = {t.root: (0.0, TWO_PI)}
    for v in t.iter_breadth_first():
        start, width = sectors[v]
        cursor = start
        for k in t.children[v]:
            share = width * leaves[k] / leaves[v]
            sectors[k] = (cursor, share)
            cursor += share
    return sectors


def yee_static_layout(t: RootedTree, p: YeeParams | None = None) -> Drawing:
    """Depth rings around the root, each node centered in its own sector."""
    p = p or YeeParams()
    sectors = subtree_sectors(t)
    positions: dict[int, tuple[float, float]] = {}
    for v, d in t.depth.items():
        start, width = sectors[v]
        angle = start + width / 2.0
        radius = d * p.ring_spacing
        positions[v] = (radius * math.cos(angle), radius * math.sin(angle))
    return Drawing(positions)


def _as_polar(point: tuple[float, float]) -> tuple[float, float]:
    return math.atan2(point[1], point[0]), math.hypot(point[0], point[1])


def _wrap_to_pi(delta: float) -> float:
    """Normalize an angle difference into (-pi, pi]."""
    wrapped = math.fmod(delta + math.pi, TWO_PI)
    if wrapped <= 0.0:
        wrapped += TWO_PI
    return wrapped - math.pi


class PolarEvaluator:
    """Vectorized positions-at-time for a root-centered transition."""

    def __init__(
        self,
        tree: RootedTree,
        theta_old: dict[int, float],
        r_old: dict[int, float],
        theta_delta: dict[int, float],
        r_new: dict[int, float],
    ) -> None:
        self.tree = tree
        self.node_order = list(tree.iter_breadth_first())
        self._theta_old = np.array([theta_old[v] for v in self.node_order])
        self._delta = np.array([theta_delta[v] for v in self.node_order])
        self._r_old = np.array([r_old[v] for v in self.node_order])
        self._r_new = np.array([r_new[v] for v in self.node_order])

    def positions_at(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        theta = self._theta_old[:, None] + self._delta[:, None] * ts[None, :]
        radius = self._r_old[:, None] * (1.0 - ts)[None, :] + self._r_new[:, None] * ts[None, :]
        return np.stack((radius * np.cos(theta), radius * np.sin(theta)), axis=-1)


def yee_animate(
    d_old: Drawing,
    t_new: RootedTree,
    p: YeeParams | None = None,
    old_parent: int | None = None,
    old_edges: object | None = None,
) -> Timeline:
    """Animate from d_old to the baseline layout of t_new.

    ``old_parent`` is the new root's parent in the tree that produced
    d_old; when given, the whole target layout is rotated so the edge from
    the new root to that node keeps its on-screen direction. ``old_edges``
    names the edges displayed in d_old (defaults to the new tree's edges).
    """
    p = p or YeeParams()
    missing = set(t_new.depth) - set(d_old.positions)
    if missing:
        raise GraphError(f"old drawing lacks positions for nodes {sorted(missing)}")
    target = yee_static_layout(t_new, p)

    rotation = 0.0
    if old_parent is not None:
        if old_parent not in d_old.positions or old_parent not in target.positions:
            raise GraphError(f"former parent {old_parent} unknown to this transition")
        ox, oy = d_old.positions[t_new.root]
        px, py = d_old.positions[old_parent]
        old_angle = math.atan2(py - oy, px - ox)
        tx, ty = target.positions[old_parent]
        new_angle = math.atan2(ty, tx)  # target root sits at the origin
        rotation = old_angle - new_angle
    cos_rot, sin_rot = math.cos(rotation), math.sin(rotation)

    theta_old: dict[int, float] = {}
    r_old: dict[int, float] = {}
    theta_delta: dict[int, float] = {}
    r_new: dict[int, float] = {}
    for v in t_new.depth:
        theta_old[v], r_old[v] = _as_polar(d_old.positions[v])
        x, y = target.positions[v]
        rotated = (x * cos_rot - y * sin_rot, x * sin_rot + y * cos_rot)
        theta_tgt, r_new[v] = _as_polar(rotated)
        theta_delta[v] = _wrap_to_pi(theta_tgt - theta_old[v])

    evaluator = PolarEvaluator(t_new, theta_old, r_old, theta_delta, r_new)
    times = [0.0, 1.0] if p.steps == 2 else ease_schedule(p.steps - 2)
    ts = np.array(times)
    sampled = evaluator.positions_at(ts)
    frames = []
    for k, t in enumerate(times):
        positions = {
            v: (float(sampled[i, k, 0]), float(sampled[i, k, 1]))
            for i, v in enumerate(evaluator.node_order)
        }
        frames.append((t, Drawing(positions)))

    displayed_old = t_new.edges() if old_edges is None else frozenset(
        normalize_edge(a, b) for a, b in old_edges
    )
    roles = classify_edges(displayed_old, t_new.edges())
    return _build_timeline(frames, roles, AnimationParams(), evaluator)

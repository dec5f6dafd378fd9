"""Edge-crossing detection and sibling edge-length statistics.

Static counts rely on an exact segment predicate (float orientation filter
with rational fallback). Transition counts approximate continuous time by
dense uniform sampling of the generating interpolation; a pair of edges is
counted at most once per transition no matter how often it crosses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Edge, GraphError, RootedTree, normalize_edge
from .coords import Drawing, Point

# Shewchuk-style half-ulp filter for the 2x2 orientation determinant.
_ORIENT_FILTER = 3.3306690738754716e-16

_PAIR_CHUNK = 4096


def _orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle (a, b, c); exact on float inputs."""
    detleft = (b[0] - a[0]) * (c[1] - a[1])
    detright = (b[1] - a[1]) * (c[0] - a[0])
    det = detleft - detright
    errbound = _ORIENT_FILTER * (abs(detleft) + abs(detright))
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    exact = (Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1])) - (
        Fraction(b[1]) - Fraction(a[1])
    ) * (Fraction(c[0]) - Fraction(a[0]))
    if exact > 0:
        return 1
    if exact < 0:
        return -1
    return 0


def _within(lo: float, x: float, hi: float) -> bool:
    return min(lo, hi) <= x <= max(lo, hi)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """p is on segment [a, b], assuming p is already on the line through it."""
    return _within(a[0], p[0], b[0]) and _within(a[1], p[1], b[1])


def _collinear_overlap(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Crossing rule for four collinear points.

    Overlap in more than one point counts; a single shared point counts only
    when it is not an endpoint of both segments.
    """
    axis = 0 if abs(p2[0] - p1[0]) >= abs(p2[1] - p1[1]) else 1
    if p1[axis] == p2[axis] and q1[axis] == q2[axis]:
        axis = 1 - axis
    plo, phi = sorted((p1[axis], p2[axis]))
    qlo, qhi = sorted((q1[axis], q2[axis]))
    lo, hi = max(plo, qlo), min(phi, qhi)
    if lo > hi:
        return False
    if lo < hi:
        return True
    # Single contact point: find it and apply the shared-endpoint rule.
    contact = next(p for p in (p1, p2, q1, q2) if p[axis] == lo and _on_segment(q1, q2, p) and _on_segment(p1, p2, p))
    return not (contact in (p1, p2) and contact in (q1, q2))


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the closed segments meet at a point that is not a shared endpoint.

    Collinear overlap over more than one point counts as a crossing; a touch
    at a point that is an endpoint of both segments does not.
    """
    o1 = _orient(p1, p2, q1)
    o2 = _orient(p1, p2, q2)
    o3 = _orient(q1, q2, p1)
    o4 = _orient(q1, q2, p2)
    if o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return o1 != o2 and o3 != o4
    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        return _collinear_overlap(p1, p2, q1, q2)
    shared = {p for p in (p1, p2) if p == q1 or p == q2}
    for o, seg, p in (
        (o1, (p1, p2), q1),
        (o2, (p1, p2), q2),
        (o3, (q1, q2), p1),
        (o4, (q1, q2), p2),
    ):
        if o == 0 and _on_segment(seg[0], seg[1], p) and p not in shared:
            return True
    return False


def count_static_crossings(d: Drawing, edges: object) -> int:
    """Crossing pairs in one drawing, by brute-force pairwise testing."""
    edge_list = sorted(normalize_edge(a, b) for a, b in edges)
    for a, b in edge_list:
        if a not in d.positions or b not in d.positions:
            raise GraphError(f"drawing lacks a position for edge ({a}, {b})")
    count = 0
    for i in range(len(edge_list)):
        a, b = edge_list[i]
        pa, pb = d.positions[a], d.positions[b]
        for j in range(i + 1, len(edge_list)):
            c, e = edge_list[j]
            if segments_cross(pa, pb, d.positions[c], d.positions[e]):
                count += 1
    return count


@dataclass(frozen=True)
class CrossingReport:
    """Crossed edge pairs over one transition, each counted once."""

    fading: int
    nonfading: int
    pairs: tuple[tuple[Edge, Edge], ...]

    @property
    def total(self) -> int:
        return self.fading + self.nonfading


@dataclass(frozen=True)
class DepthLengthRecord:
    depth: int
    mean: float
    std: float
    count: int


@dataclass(frozen=True)
class FamilyLengthRecord:
    parent: int
    depth: int  # depth of the children
    mean: float
    std: float
    count: int


@dataclass(frozen=True)
class SiblingLengthStats:
    """Parent-edge length statistics per depth class and per sibling set."""

    per_depth: tuple[DepthLengthRecord, ...]
    per_family: tuple[FamilyLengthRecord, ...]

    def max_family_std(self) -> float:
        return max((f.std for f in self.per_family), default=0.0)


def _population_stats(values: list[float]) -> tuple[float, float]:
    mean = sum(values) / len(values)
    var = sum((x - mean) ** 2 for x in values) / len(values)
    return mean, math.sqrt(var)


def sibling_edge_length_stats(d: Drawing, t: RootedTree) -> SiblingLengthStats:
    """Euclidean child-to-parent edge lengths, aggregated two ways.

    Uses population standard deviations: the parent-centered layout's
    "no variance among siblings" claim is an exact-zero statement.
    """
    lengths: dict[int, float] = {}
    for v, p in t.parent.items():
        dx = d.positions[v][0] - d.positions[p][0]
        dy = d.positions[v][1] - d.positions[p][1]
        lengths[v] = math.hypot(dx, dy)

    by_depth: dict[int, list[float]] = {}
    for v, length in lengths.items():
        by_depth.setdefault(t.depth[v], []).append(length)
    per_depth = tuple(
        DepthLengthRecord(depth, *_population_stats(vals), len(vals))
        for depth, vals in sorted(by_depth.items())
    )

    families = []
    for parent, kids in sorted(t.children.items()):
        if not kids:
            continue
        vals = [lengths[k] for k in kids]
        mean, std = _population_stats(vals)
        families.append(
            FamilyLengthRecord(parent, t.depth[parent] + 1, mean, std, len(vals))
        )
    return SiblingLengthStats(per_depth, tuple(families))


def _sampled_positions(evaluator, samples: int) -> tuple[np.ndarray, dict[int, int]]:
    # j/samples for j = 0..samples: uniform, endpoint-inclusive, and nested
    # under doubling, so refining the sample count never loses a crossing.
    ts = np.arange(samples + 1) / samples
    positions = evaluator.positions_at(ts)
    index = {node: i for i, node in enumerate(evaluator.node_order)}
    return positions, index


def count_transition_crossings(
    tl,
    old_edges: object,
    new_edges: object,
    samples: int = 256,
) -> CrossingReport:
    """Count edge pairs that cross at any of ``samples`` uniform times.

    The edge universe is the union of both sets; positions come from
    re-evaluating the timeline's generating interpolation, not from its
    stored frames. A crossed pair is *fading* if at least one member is
    absent from the new edge set and *nonfading* if both survive into the
    final drawing. Pairs sharing an endpoint are skipped: they can only
    meet at that endpoint or in instantaneous collinear overlap, neither of
    which counts under dense time sampling.
    """
    if samples < 2:
        raise GraphError(f"need at least 2 samples, got {samples}")
    if tl.evaluator is None:
        raise GraphError("timeline carries no generating interpolation")
    if samples < len(tl.frames):
        raise GraphError(
            f"samples ({samples}) must not undercut the frame count ({len(tl.frames)})"
        )
    old = frozenset(normalize_edge(a, b) for a, b in old_edges)
    new = frozenset(normalize_edge(a, b) for a, b in new_edges)
    universe = sorted(old | new)

    positions, index = _sampled_positions(tl.evaluator, samples)
    pair_indices = [
        (i, j)
        for i in range(len(universe))
        for j in range(i + 1, len(universe))
        if not set(universe[i]) & set(universe[j])
    ]
    if not pair_indices:
        return CrossingReport(0, 0, ())

    starts = np.array([index[e[0]] for e in universe])
    ends = np.array([index[e[1]] for e in universe])
    crossed: list[tuple[Edge, Edge]] = []
    for lo in range(0, len(pair_indices), _PAIR_CHUNK):
        chunk = pair_indices[lo : lo + _PAIR_CHUNK]
        ei = np.array([c[0] for c in chunk])
        ej = np.array([c[1] for c in chunk])
        a1 = positions[starts[ei]]  # (P, S, 2)
        a2 = positions[ends[ei]]
        b1 = positions[starts[ej]]
        b2 = positions[ends[ej]]
        hit = _proper_crossing_any(a1, a2, b1, b2)
        for k in np.flatnonzero(hit):
            crossed.append((universe[chunk[k][0]], universe[chunk[k][1]]))

    fading = sum(1 for e, f in crossed if e not in new or f not in new)
    return CrossingReport(fading, len(crossed) - fading, tuple(crossed))


def _cross2(ux, uy, vx, vy):
    return ux * vy - uy * vx


def _proper_crossing_any(a1, a2, b1, b2) -> np.ndarray:
    """Per-pair flag: segments properly cross at some sample. Inputs (P, S, 2)."""
    rax = a2[..., 0] - a1[..., 0]
    ray = a2[..., 1] - a1[..., 1]
    rbx = b2[..., 0] - b1[..., 0]
    rby = b2[..., 1] - b1[..., 1]
    d1 = _cross2(rax, ray, b1[..., 0] - a1[..., 0], b1[..., 1] - a1[..., 1])
    d2 = _cross2(rax, ray, b2[..., 0] - a1[..., 0], b2[..., 1] - a1[..., 1])
    d3 = _cross2(rbx, rby, a1[..., 0] - b1[..., 0], a1[..., 1] - b1[..., 1])
    d4 = _cross2(rbx, rby, a2[..., 0] - b1[..., 0], a2[..., 1] - b1[..., 1])
    proper = (d1 * d2 < 0.0) & (d3 * d4 < 0.0)
    return proper.any(axis=-1)


def count_fan_crossings(tl, samples: int = 256) -> int:
    """Sampled crossings inside parent-child edge fans of a transition tree.

    Edges from one node to its children share that node exactly, so the only
    way a pair of them can cross is collinear overlap: both children on the
    same ray from the parent at some sampled time. Candidate samples pass a
    float cross-product screen; each is confirmed with the exact segment
    predicate. Returns how many (node, child-pair) fans overlap at any
    sampled time.
    """
    if tl.evaluator is None:
        raise GraphError("timeline carries no generating interpolation")
    tree: RootedTree = tl.evaluator.tree
    positions, index = _sampled_positions(tl.evaluator, samples)
    overlaps = 0
    for v, kids in tree.children.items():
        if len(kids) < 2:
            continue
        pv = positions[index[v]]  # (S, 2)
        rel = np.stack([positions[index[k]] for k in kids]) - pv  # (K, S, 2)
        for i in range(len(kids)):
            pi = positions[index[kids[i]]]
            for j in range(i + 1, len(kids)):
                pj = positions[index[kids[j]]]
                cross = _cross2(rel[i, :, 0], rel[i, :, 1], rel[j, :, 0], rel[j, :, 1])
                dot = rel[i, :, 0] * rel[j, :, 0] + rel[i, :, 1] * rel[j, :, 1]
                # The screen keeps every exact-zero cross: float error stays
                # far below 1e-9 of the coordinate scale. Opposite rays or a
                # zero-length edge meet only at the shared parent.
                scale = np.abs(rel[i]).max(axis=-1) * np.abs(rel[j]).max(axis=-1)
                candidates = np.flatnonzero((np.abs(cross) <= 1e-9 * scale) & (dot > 0.0))
                for k in candidates:
                    o = (float(pv[k, 0]), float(pv[k, 1]))
                    a = (float(pi[k, 0]), float(pi[k, 1]))
                    b = (float(pj[k, 0]), float(pj[k, 1]))
                    if segments_cross(o, a, o, b):
                        overlaps += 1
                        break
    return overlaps

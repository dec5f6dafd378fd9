"""Parent-centered polar coordinates and lossless Cartesian conversion.

Every node's (theta, r) lives in a frame decided by its tree position:

* the root's coordinate is read in the drawing plane itself,
* a child of the root is read in a frame centered on the root with zero
  degrees along the drawing plane's +x axis,
* any other node is read in a frame centered on its parent with zero
  degrees along the ray from the parent toward the grandparent.

Angles are radians, counter-clockwise positive, compared modulo 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import GraphError, RootedTree

Point = tuple[float, float]

# Below this parent-to-grandparent distance a frame has no usable zero ray
# and we fall back to the parent's own inherited zero direction.
DEGENERATE_FRAME_EPS = 1e-12


class PolarCoord(NamedTuple):
    theta: float
    r: float


@dataclass(frozen=True)
class Drawing:
    """Absolute Cartesian position per node; the renderable form."""

    positions: dict[int, Point]

    def __post_init__(self) -> None:
        for v, (x, y) in self.positions.items():
            if not (math.isfinite(x) and math.isfinite(y)):
                raise GraphError(f"non-finite position for node {v}")

    def bounds(self) -> tuple[float, float, float, float]:
        """(min_x, min_y, max_x, max_y) over all positions."""
        xs = [p[0] for p in self.positions.values()]
        ys = [p[1] for p in self.positions.values()]
        return min(xs), min(ys), max(xs), max(ys)


def drawing_to_json(d: Drawing) -> dict:
    """Drawing file payload: ``{"positions": {"<id>": [x, y]}}``."""
    return {
        "positions": {str(v): [x, y] for v, (x, y) in sorted(d.positions.items())}
    }


def drawing_from_json(payload: object) -> Drawing:
    if not isinstance(payload, dict) or not isinstance(payload.get("positions"), dict):
        raise GraphError("drawing payload needs a 'positions' object")
    positions: dict[int, Point] = {}
    for key, value in payload["positions"].items():
        try:
            v = int(key)
        except ValueError as exc:
            raise GraphError(f"non-integer node key {key!r}") from exc
        if (
            not isinstance(value, (list, tuple))
            or len(value) != 2
            or not all(isinstance(c, (int, float)) for c in value)
        ):
            raise GraphError(f"malformed position for node {key}")
        positions[v] = (float(value[0]), float(value[1]))
    return Drawing(positions)


@dataclass(frozen=True)
class ParentCenteredModel:
    """One polar coordinate per tree node, each in its own parent frame.

    ``degenerate_nodes`` lists nodes whose frame had to fall back to the
    parent's inherited zero direction during a conversion from Cartesian
    input (coincident parent and grandparent).
    """

    coords: dict[int, PolarCoord]
    tree: RootedTree
    degenerate_nodes: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if set(self.coords) != set(self.tree.depth):
            raise GraphError("model must carry exactly one coordinate per tree node")
        for v, (theta, r) in self.coords.items():
            if not math.isfinite(theta) or not math.isfinite(r) or r < 0:
                raise GraphError(f"invalid polar coordinate for node {v}")


def _rotate(dx: float, dy: float, cos_t: float, sin_t: float) -> Point:
    return (dx * cos_t - dy * sin_t, dx * sin_t + dy * cos_t)


def _frame_direction(
    parent_pos: Point,
    grandparent_pos: Point,
    inherited: Point,
    warnings: list[int] | None,
    node: int,
) -> Point:
    ux = grandparent_pos[0] - parent_pos[0]
    uy = grandparent_pos[1] - parent_pos[1]
    length = math.hypot(ux, uy)
    if length < DEGENERATE_FRAME_EPS:
        if warnings is not None:
            warnings.append(node)
        return inherited
    return (ux / length, uy / length)


def to_drawing(m: ParentCenteredModel) -> Drawing:
    """Realize a parent-centered model as absolute Cartesian positions.

    Single root-to-leaves traversal; each node ends up at its frame origin
    plus r units along its theta direction rotated into the frame.
    """
    tree = m.tree
    theta0, r0 = m.coords[tree.root]
    positions: dict[int, Point] = {
        tree.root: (r0 * math.cos(theta0), r0 * math.sin(theta0))
    }
    # Zero-degree direction of the frame each node's own coordinate uses.
    frame_dir: dict[int, Point] = {tree.root: (1.0, 0.0)}
    for v in tree.iter_breadth_first():
        if v == tree.root:
            continue
        p = tree.parent[v]
        if p == tree.root:
            f = (1.0, 0.0)
        else:
            f = _frame_direction(
                positions[p], positions[tree.parent[p]], frame_dir[p], None, v
            )
        frame_dir[v] = f
        theta, r = m.coords[v]
        dx, dy = _rotate(f[0], f[1], math.cos(theta), math.sin(theta))
        px, py = positions[p]
        positions[v] = (px + r * dx, py + r * dy)
    return Drawing(positions)


def from_drawing(d: Drawing, t: RootedTree) -> ParentCenteredModel:
    """Express an arbitrary straight-line drawing in parent-centered form.

    Exact inverse of :func:`to_drawing` up to theta modulo 2*pi. Nodes whose
    parent coincides with their grandparent (within ``DEGENERATE_FRAME_EPS``)
    use the parent's inherited zero direction and are reported in the
    model's ``degenerate_nodes``.
    """
    missing = set(t.depth) - set(d.positions)
    if missing:
        raise GraphError(f"drawing lacks positions for nodes {sorted(missing)}")
    warnings: list[int] = []
    rx, ry = d.positions[t.root]
    coords: dict[int, PolarCoord] = {
        t.root: PolarCoord(math.atan2(ry, rx), math.hypot(rx, ry))
    }
    frame_dir: dict[int, Point] = {t.root: (1.0, 0.0)}
    for v in t.iter_breadth_first():
        if v == t.root:
            continue
        p = t.parent[v]
        if p == t.root:
            f = (1.0, 0.0)
        else:
            f = _frame_direction(
                d.positions[p], d.positions[t.parent[p]], frame_dir[p], warnings, v
            )
        frame_dir[v] = f
        dx = d.positions[v][0] - d.positions[p][0]
        dy = d.positions[v][1] - d.positions[p][1]
        # Angle of (dx, dy) measured counter-clockwise from the frame ray f.
        theta = math.atan2(f[0] * dy - f[1] * dx, f[0] * dx + f[1] * dy)
        coords[v] = PolarCoord(theta, math.hypot(dx, dy))
    return ParentCenteredModel(coords, t, tuple(warnings))


def angles_equal_mod_2pi(a: float, b: float, tol: float = 1e-9) -> bool:
    """True when a and b name the same direction within ``tol`` radians."""
    d = (a - b) % (2.0 * math.pi)
    return d <= tol or (2.0 * math.pi - d) <= tol

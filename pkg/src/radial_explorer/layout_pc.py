"""Parent-centered static radial layout with containment circles and arcs.

Children of the root are spread over a full circle of user-defined radius;
children of any other node share a containment circle around it, evenly
spaced on an arc of width ``arc_angle`` that opens away from the
grandparent. The family radius halves for an only child and otherwise
reaches the arc midpoint between the parent and its nearest sibling, so
every sibling set shares one exact radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import GraphError, RootedTree
from .coords import ParentCenteredModel, PolarCoord

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class LayoutParams:
    root_radius: float = 100.0
    arc_angle: float = math.pi

    def __post_init__(self) -> None:
        if not (self.root_radius > 0):
            raise GraphError(f"root_radius must be > 0, got {self.root_radius}")
        if not (0.0 < self.arc_angle < TWO_PI):
            raise GraphError(
                f"arc_angle must be in (0, 2*pi), got {self.arc_angle}"
            )


def _family_radius(own_radius: float, nearest_gap: float | None) -> float:
    """Containment-circle radius for a node's children.

    ``nearest_gap`` is the angular distance to the node's nearest sibling on
    their shared containment circle, or None for an only child. The straight
    distance from the node to the arc midpoint halfway to that sibling is
    2 * r * sin(gap / 4).
    """
    if nearest_gap is None:
        return own_radius / 2.0
    return 2.0 * own_radius * math.sin(nearest_gap / 4.0)


def static_layout(t: RootedTree, params: LayoutParams | None = None) -> ParentCenteredModel:
    """Algorithm: root at (0, 0), one containment circle per family.

    Deterministic in (tree, params); children keep their stored order, the
    i-th of m root children sits at 2*pi*i/m, the i-th of m deeper children
    at pi - phi/2 + phi*(2i - 1)/(2m) (1-based, symmetric about pi).
    """
    params = params or LayoutParams()
    phi = params.arc_angle
    coords: dict[int, PolarCoord] = {t.root: PolarCoord(0.0, 0.0)}
    # Angular gap to the nearest sibling, None when the node has none.
    nearest_gap: dict[int, float | None] = {t.root: None}

    for v in t.iter_breadth_first():
        kids = t.children[v]
        m = len(kids)
        if m == 0:
            continue
        if v == t.root:
            radius = params.root_radius
            angles = [TWO_PI * (i + 1) / m for i in range(m)]
            # Root children wrap all the way around the circle.
            child_gap = TWO_PI / m if m > 1 else None
        else:
            radius = _family_radius(coords[v].r, nearest_gap[v])
            angles = [
                math.pi - phi / 2.0 + phi * (2 * i + 1) / (2.0 * m) for i in range(m)
            ]
            # On an arc the wrap-around gap 2*pi - phi*(m-1)/m always exceeds
            # the in-arc spacing phi/m for phi < 2*pi, so neighbors are nearest.
            child_gap = phi / m if m > 1 else None
        for i, c in enumerate(kids):
            coords[c] = PolarCoord(angles[i], radius)
            nearest_gap[c] = child_gap
    return ParentCenteredModel(coords, t)

"""Still-image SVG export of a drawing with its tree edges.

The output is plain text with fixed-precision coordinates, so repeated
exports of the same drawing are byte-identical and diff cleanly.
"""

from __future__ import annotations

import math

from .coords import Drawing
from .graph import Edge, GraphError, RootedTree

NODE_RADIUS = 4.0
MARGIN_FRACTION = 0.05

_EDGE_STYLE = 'stroke="#36415a" stroke-width="1.5"'
_NODE_STYLE = 'fill="#e8eef7" stroke="#36415a" stroke-width="1.2"'
_CIRCLE_STYLE = 'fill="none" stroke="#9ab0d0" stroke-width="0.8" stroke-dasharray="4 3"'
_LABEL_STYLE = 'font-family="sans-serif" font-size="10" text-anchor="middle"'


def _fmt(x: float) -> str:
    # fixed precision keeps files byte-stable and avoids -0.0 noise
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _check_nodes(d: Drawing, edges: tuple[Edge, ...], tree: RootedTree | None) -> None:
    have = set(d.positions)
    referenced = {v for e in edges for v in e}
    if tree is not None:
        referenced.update(tree.depth)
    missing = referenced - have
    if missing:
        raise GraphError(f"drawing lacks positions for nodes {sorted(missing)}")


def render_svg(
    d: Drawing,
    edges: tuple[Edge, ...] = (),
    *,
    tree: RootedTree | None = None,
    node_radius: float = NODE_RADIUS,
    show_circles: bool = False,
    show_labels: bool = False,
) -> str:
    """Render straight-line edges and circular node glyphs.

    ``tree`` enables the optional per-parent child-circle overlay; labels
    print each node id under its glyph. Drawing y grows upward, SVG y
    grows downward, so y is negated on output.
    """
    if not d.positions:
        raise GraphError("cannot render an empty drawing")
    _check_nodes(d, tuple(edges), tree)

    min_x, min_y, max_x, max_y = d.bounds()
    span = max(max_x - min_x, max_y - min_y, 1.0)
    pad = MARGIN_FRACTION * span + node_radius
    view = (
        _fmt(min_x - pad),
        _fmt(-max_y - pad),
        _fmt(max_x - min_x + 2 * pad),
        _fmt(max_y - min_y + 2 * pad),
    )

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{view[0]} {view[1]} {view[2]} {view[3]}">'
    ]

    if show_circles and tree is not None:
        for v in sorted(tree.children):
            kids = tree.children[v]
            if not kids:
                continue
            cx, cy = d.positions[v]
            radius = sum(math.dist(d.positions[v], d.positions[k]) for k in kids) / len(kids)
            parts.append(
                f'  <circle cx="{_fmt(cx)}" cy="{_fmt(-cy)}" r="{_fmt(radius)}" '
                f"{_CIRCLE_STYLE}/>"
            )

    for a, b in edges:
        (x1, y1), (x2, y2) = d.positions[a], d.positions[b]
        parts.append(
            f'  <line x1="{_fmt(x1)}" y1="{_fmt(-y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(-y2)}" {_EDGE_STYLE}/>'
        )

    for v in sorted(d.positions):
        x, y = d.positions[v]
        parts.append(
            f'  <circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{_fmt(node_radius)}" '
            f"{_NODE_STYLE}/>"
        )

    if show_labels:
        offset = node_radius * 2.5
        for v in sorted(d.positions):
            x, y = d.positions[v]
            parts.append(
                f'  <text x="{_fmt(x)}" y="{_fmt(-y + offset)}" {_LABEL_STYLE}>{v}</text>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Command-line front end.

Subcommands: generate, layout, animate, experiment, export-svg, serve.
Every run is a pure function of its inputs, flags, and seed; repeated
invocations write identical bytes. Exit codes: 0 success, 1 usage error,
2 data error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .animation import AnimationParams, animate, force_directed_layout
from .coords import drawing_from_json, drawing_to_json, to_drawing
from .experiments import RUNNERS, ExperimentConfig, manifest_json, rows_to_csv
from .graph import (
    GraphError,
    bfs_spanning_tree,
    generate_random_graph,
    graph_from_json,
    graph_to_json,
    tree_from_json,
    tree_to_json,
)
from .layout_pc import LayoutParams, static_layout
from .layout_yee import YeeParams, yee_static_layout
from .svg_export import NODE_RADIUS, render_svg

PROG = "radial-explorer"
ENV_SEED = "RADIAL_EXPLORER_SEED"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems with exit code 2; remap to 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_orders(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an inclusive range like 30..100, got {text!r}"
        ) from None


def _build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: _Parser) -> None:
        p.add_argument("--seed", type=int, default=None,
                       help=f"64-bit seed; falls back to ${ENV_SEED}, then 0")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("generate", help="write a connected random graph as JSON")
    p.add_argument("--n", type=int, required=True, help="node count")
    p.add_argument("--edge-prob", type=float, default=0.1)
    common(p)

    p = sub.add_parser("layout", help="lay out a BFS spanning tree of a graph file")
    p.add_argument("--graph", required=True, help="graph JSON path")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--algorithm", choices=("pc", "yee"), default="pc")
    p.add_argument("--root-radius", type=float, default=100.0,
                   help="root circle radius (pc) / ring spacing (yee)")
    p.add_argument("--phi", type=float, default=math.pi,
                   help="containment arc width in radians (pc only)")
    p.add_argument("--tree-output", default=None,
                   help="also write the spanning tree JSON here")
    common(p)

    p = sub.add_parser("animate", help="write a re-root transition as JSON lines")
    p.add_argument("--graph", required=True, help="graph JSON path")
    p.add_argument("--new-root", type=int, required=True)
    p.add_argument("--drawing", default=None,
                   help="starting drawing JSON; default is a force-directed layout")
    p.add_argument("--steps", type=int, default=30, help="intermediate frame count")
    p.add_argument("--root-radius", type=float, default=100.0)
    p.add_argument("--phi", type=float, default=math.pi)
    common(p)

    p = sub.add_parser("experiment", help="run a benchmark and write CSV")
    p.add_argument("name", choices=sorted(RUNNERS))
    p.add_argument("--orders", type=_parse_orders, default=(30, 100),
                   metavar="A..B", help="inclusive graph-order range")
    p.add_argument("--graphs-per-order", type=int, default=10)
    p.add_argument("--edge-prob", type=float, default=0.1)
    p.add_argument("--scale", type=int, default=None,
                   help="divide graphs-per-order by this for quick runs")
    p.add_argument("--samples", type=int, default=256,
                   help="time subdivisions per transition crossing count")
    common(p)

    p = sub.add_parser("export-svg", help="render a drawing and tree to SVG")
    p.add_argument("--drawing", required=True, help="drawing JSON path")
    p.add_argument("--tree", required=True, help="tree JSON path")
    p.add_argument("--show-circles", action="store_true",
                   help="overlay each parent's child circle")
    p.add_argument("--labels", action="store_true", help="print node ids")
    p.add_argument("--node-radius", type=float, default=NODE_RADIUS)
    common(p)

    p = sub.add_parser("serve", help="run the HTTP session server")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    common(p)

    return parser


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(ENV_SEED)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise GraphError(f"${ENV_SEED} must be an integer, got {env!r}") from None
    return 0


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_json(path: str) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path} is not valid JSON: {exc}") from exc


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_generate(args: argparse.Namespace) -> None:
    g = generate_random_graph(args.n, args.edge_prob, _resolve_seed(args))
    _write_text(args.output, _dump_json(graph_to_json(g)))


def _cmd_layout(args: argparse.Namespace) -> None:
    g = graph_from_json(_read_json(args.graph))
    tree = bfs_spanning_tree(g, args.root)
    if args.algorithm == "pc":
        params = LayoutParams(root_radius=args.root_radius, arc_angle=args.phi)
        d = to_drawing(static_layout(tree, params))
    else:
        d = yee_static_layout(tree, YeeParams(ring_spacing=args.root_radius))
    _write_text(args.output, _dump_json(drawing_to_json(d)))
    if args.tree_output is not None:
        _write_text(args.tree_output, _dump_json(tree_to_json(tree)))


def _cmd_animate(args: argparse.Namespace) -> None:
    g = graph_from_json(_read_json(args.graph))
    if args.drawing is not None:
        d_old = drawing_from_json(_read_json(args.drawing))
    else:
        d_old = force_directed_layout(g, seed=_resolve_seed(args))
    params = AnimationParams(
        steps=args.steps,
        layout=LayoutParams(root_radius=args.root_radius, arc_angle=args.phi),
    )
    timeline = animate(g, d_old, args.new_root, params)
    _write_text(args.output, timeline.to_jsonl())


def _cmd_experiment(args: argparse.Namespace) -> None:
    cfg = ExperimentConfig(
        orders=args.orders,
        graphs_per_order=args.graphs_per_order,
        edge_prob=args.edge_prob,
        seed=_resolve_seed(args),
        samples_per_transition=args.samples,
        scale=args.scale,
    )
    rows = RUNNERS[args.name](cfg)
    _write_text(args.output, rows_to_csv(rows))
    if args.output is not None and args.output != "-":
        manifest_path = f"{args.output}.manifest.json"
        _write_text(manifest_path, manifest_json(args.name, cfg, len(rows)))


def _cmd_export_svg(args: argparse.Namespace) -> None:
    d = drawing_from_json(_read_json(args.drawing))
    tree = tree_from_json(_read_json(args.tree))
    svg = render_svg(
        d,
        tree.edges(),
        tree=tree,
        node_radius=args.node_radius,
        show_circles=args.show_circles,
        show_labels=args.labels,
    )
    _write_text(args.output, svg)


def _cmd_serve(args: argparse.Namespace) -> None:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")


_COMMANDS = {
    "generate": _cmd_generate,
    "layout": _cmd_layout,
    "animate": _cmd_animate,
    "experiment": _cmd_experiment,
    "export-svg": _cmd_export_svg,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except (GraphError, OSError) as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Interactive graph exploration with parent-centered radial layouts.

The package draws a breadth-first spanning tree of a connected graph,
keeps every node's position in a polar frame centered at its parent, and
animates re-rooting by interpolating those frames, which keeps sibling
edge lengths equal and tree edges from tangling mid-flight. A re-rooted
baseline that places each depth on a concentric ring is included for
comparison, along with crossing and edge-length metrics, seeded benchmark
experiments, a CLI, and an HTTP session server.
"""

from .animation import (
    AnimationParams,
    ROLE_NEW_ONLY,
    ROLE_OLD_ONLY,
    ROLE_SHARED,
    Timeline,
    TransitionEvaluator,
    animate,
    animate_tree,
    classify_edges,
    ease_schedule,
    force_directed_layout,
    timeline_from_jsonl,
)
from .coords import (
    Drawing,
    ParentCenteredModel,
    PolarCoord,
    drawing_from_json,
    drawing_to_json,
    from_drawing,
    to_drawing,
)
from .experiments import (
    ExperimentConfig,
    ResultRow,
    manifest_json,
    order_means,
    rows_to_csv,
    run_experiment_iso,
    run_experiment_siblen,
    run_experiment_span,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    RootedTree,
    bfs_spanning_tree,
    generate_random_graph,
    graph_from_json,
    graph_to_json,
    reroot_tree,
    tree_from_json,
    tree_to_json,
)
from .layout_pc import LayoutParams, static_layout
from .layout_yee import PolarEvaluator, YeeParams, yee_animate, yee_static_layout
from .metrics import (
    CrossingReport,
    count_fan_crossings,
    count_static_crossings,
    count_transition_crossings,
    segments_cross,
    sibling_edge_length_stats,
)
from .svg_export import render_svg

__version__ = "0.1.0"

__all__ = [
    "AnimationParams",
    "CrossingReport",
    "DisconnectedGraphError",
    "Drawing",
    "ExperimentConfig",
    "Graph",
    "GraphError",
    "LayoutParams",
    "ParentCenteredModel",
    "PolarCoord",
    "PolarEvaluator",
    "ResultRow",
    "ROLE_NEW_ONLY",
    "ROLE_OLD_ONLY",
    "ROLE_SHARED",
    "RootedTree",
    "Timeline",
    "TransitionEvaluator",
    "YeeParams",
    "animate",
    "animate_tree",
    "bfs_spanning_tree",
    "classify_edges",
    "count_fan_crossings",
    "count_static_crossings",
    "count_transition_crossings",
    "drawing_from_json",
    "drawing_to_json",
    "ease_schedule",
    "force_directed_layout",
    "from_drawing",
    "generate_random_graph",
    "graph_from_json",
    "graph_to_json",
    "manifest_json",
    "order_means",
    "render_svg",
    "reroot_tree",
    "rows_to_csv",
    "run_experiment_iso",
    "run_experiment_siblen",
    "run_experiment_span",
    "segments_cross",
    "sibling_edge_length_stats",
    "static_layout",
    "timeline_from_jsonl",
    "to_drawing",
    "tree_from_json",
    "tree_to_json",
    "yee_animate",
    "yee_static_layout",
    "__version__",
]

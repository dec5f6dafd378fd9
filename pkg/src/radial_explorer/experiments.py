"""Seeded benchmark harness comparing the two layout schemes.

Three experiments over Erdős–Rényi graphs, each trial fully determined by
(config seed, graph order, graph index):

* ``iso``: re-root one spanning tree; count transition crossings.
* ``span``: switch to a different root's spanning tree; count fading
  and non-fading transition crossings separately.
* ``siblen``: measure child-to-parent edge lengths in both static layouts.

Results come back as long-form rows and serialize to CSV byte-identically
for identical configs.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass

from .animation import AnimationParams, animate_tree
from .coords import to_drawing
from .graph import GraphError, bfs_spanning_tree, generate_random_graph, reroot_tree
from .layout_pc import static_layout
from .layout_yee import yee_animate, yee_static_layout
from .metrics import count_transition_crossings, sibling_edge_length_stats

ALGORITHM_PC = "pc"
ALGORITHM_YEE = "yee"

CSV_HEADER = ("experiment", "algorithm", "order", "graph_index", "seed", "metric", "value")

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One step of the splitmix64 generator; a 64-bit bijective mixer."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def trial_seed(seed: int, order: int, index: int) -> int:
    """Well-mixed per-trial seed, independent of trial iteration order."""
    return splitmix64(splitmix64(splitmix64(seed) ^ order) ^ index)


@dataclass(frozen=True)
class ExperimentConfig:
    orders: tuple[int, int] = (30, 100)
    graphs_per_order: int = 10
    edge_prob: float = 0.1
    seed: int = 0
    samples_per_transition: int = 256
    scale: int | None = None

    def __post_init__(self) -> None:
        lo, hi = self.orders
        if lo > hi or lo < 1:
            raise GraphError(f"orders range {self.orders} is empty or invalid")
        if self.graphs_per_order < 1:
            raise GraphError("graphs_per_order must be >= 1")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise GraphError(f"edge_prob must be in [0, 1], got {self.edge_prob}")
        if self.samples_per_transition < 2:
            raise GraphError("samples_per_transition must be >= 2")
        if self.scale is not None and self.scale < 1:
            raise GraphError("scale must be >= 1")

    @property
    def effective_graphs_per_order(self) -> int:
        if self.scale is None:
            return self.graphs_per_order
        return max(1, self.graphs_per_order // self.scale)

    def order_values(self) -> range:
        return range(self.orders[0], self.orders[1] + 1)

    @property
    def trials_per_algorithm(self) -> int:
        return len(self.order_values()) * self.effective_graphs_per_order

    def to_json(self) -> dict:
        return {
            "orders": [self.orders[0], self.orders[1]],
            "graphs_per_order": self.graphs_per_order,
            "edge_prob": self.edge_prob,
            "seed": self.seed,
            "samples_per_transition": self.samples_per_transition,
            "scale": self.scale,
            "effective_graphs_per_order": self.effective_graphs_per_order,
        }


@dataclass(frozen=True)
class ResultRow:
    experiment: str
    algorithm: str
    order: int
    graph_index: int
    seed: int
    metric: str
    value: float


def _trials(cfg: ExperimentConfig):
    """Yield (order, index, seed, graph, root_a, root_b, tree_a) per trial.

    Each trial draws its graph seed and both roots from one stream, so a
    single config seed reproduces the entire experiment.
    """
    for order in cfg.order_values():
        for index in range(cfg.effective_graphs_per_order):
            seed = trial_seed(cfg.seed, order, index)
            rng = random.Random(seed)
            graph = generate_random_graph(order, cfg.edge_prob, rng.getrandbits(63))
            if order == 1:
                root_a = root_b = 0
            else:
                root_a, root_b = rng.sample(range(order), 2)
            tree_a = bfs_spanning_tree(graph, root_a)
            yield order, index, seed, graph, root_a, root_b, tree_a


def _crossing_reports(cfg, tree_a, tree_b, root_b):
    """Run both animators over the tree_a -> tree_b transition and count."""
    old_edges = tree_a.edges()
    new_edges = tree_b.edges()

    d_pc = to_drawing(static_layout(tree_a))
    tl_pc = animate_tree(d_pc, tree_b, AnimationParams(), old_edges=old_edges)
    report_pc = count_transition_crossings(
        tl_pc, old_edges, new_edges, samples=cfg.samples_per_transition
    )

    d_yee = yee_static_layout(tree_a)
    tl_yee = yee_animate(
        d_yee, tree_b, old_parent=tree_a.parent.get(root_b), old_edges=old_edges
    )
    report_yee = count_transition_crossings(
        tl_yee, old_edges, new_edges, samples=cfg.samples_per_transition
    )
    return report_pc, report_yee


def run_experiment_iso(cfg: ExperimentConfig) -> list[ResultRow]:
    """Re-root a spanning tree without changing its edge set; count crossings."""
    rows: list[ResultRow] = []
    for order, index, seed, graph, root_a, root_b, tree_a in _trials(cfg):
        tree_b = reroot_tree(tree_a, root_b)
        report_pc, report_yee = _crossing_reports(cfg, tree_a, tree_b, root_b)
        for algorithm, report in ((ALGORITHM_PC, report_pc), (ALGORITHM_YEE, report_yee)):
            rows.append(
                ResultRow("iso", algorithm, order, index, seed, "crossings", report.total)
            )
    return rows


def run_experiment_span(cfg: ExperimentConfig) -> list[ResultRow]:
    """Transition between two different spanning trees of the same graph."""
    rows: list[ResultRow] = []
    for order, index, seed, graph, root_a, root_b, tree_a in _trials(cfg):
        tree_b = bfs_spanning_tree(graph, root_b)
        report_pc, report_yee = _crossing_reports(cfg, tree_a, tree_b, root_b)
        for algorithm, report in ((ALGORITHM_PC, report_pc), (ALGORITHM_YEE, report_yee)):
            rows.append(
                ResultRow("span", algorithm, order, index, seed, "fading", report.fading)
            )
            rows.append(
                ResultRow("span", algorithm, order, index, seed, "nonfading", report.nonfading)
            )
    return rows


def run_experiment_siblen(cfg: ExperimentConfig) -> list[ResultRow]:
    """Child-to-parent edge length statistics of both static layouts."""
    rows: list[ResultRow] = []
    for order, index, seed, graph, root_a, root_b, tree_a in _trials(cfg):
        layouts = (
            (ALGORITHM_PC, to_drawing(static_layout(tree_a))),
            (ALGORITHM_YEE, yee_static_layout(tree_a)),
        )
        for algorithm, drawing in layouts:
            stats = sibling_edge_length_stats(drawing, tree_a)
            for record in stats.per_depth:
                rows.append(
                    ResultRow(
                        "siblen", algorithm, order, index, seed,
                        f"mean_length_depth_{record.depth}", record.mean,
                    )
                )
                rows.append(
                    ResultRow(
                        "siblen", algorithm, order, index, seed,
                        f"std_length_depth_{record.depth}", record.std,
                    )
                )
            rows.append(
                ResultRow(
                    "siblen", algorithm, order, index, seed,
                    "max_family_std", stats.max_family_std(),
                )
            )
    return rows


RUNNERS = {
    "iso": run_experiment_iso,
    "span": run_experiment_span,
    "siblen": run_experiment_siblen,
}


def rows_to_csv(rows: list[ResultRow]) -> str:
    """Long-form CSV text; byte-stable for identical row lists."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        value = row.value
        cell = repr(float(value)) if isinstance(value, float) else str(value)
        writer.writerow(
            [row.experiment, row.algorithm, row.order, row.graph_index, row.seed, row.metric, cell]
        )
    return buffer.getvalue()


def manifest_json(experiment: str, cfg: ExperimentConfig, row_count: int) -> str:
    payload = {
        "experiment": experiment,
        "config": cfg.to_json(),
        "trials_per_algorithm": cfg.trials_per_algorithm,
        "rows": row_count,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def filter_rows(rows, **want) -> list[ResultRow]:
    return [r for r in rows if all(getattr(r, k) == v for k, v in want.items())]


def mean_value(rows, **want) -> float:
    got = filter_rows(rows, **want)
    if not got:
        raise GraphError(f"no rows match {want}")
    return sum(r.value for r in got) / len(got)


def order_means(rows, **want) -> dict[int, float]:
    """Mean of the matching rows' values, bucketed by graph order."""
    got = filter_rows(rows, **want)
    if not got:
        raise GraphError(f"no rows match {want}")
    orders = sorted({r.order for r in got})
    return {o: mean_value(got, order=o) for o in orders}

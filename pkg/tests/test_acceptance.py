"""Acceptance suite: nine numbered criteria, one verdict line each.

Each test prints ``criterion N: PASS/FAIL - detail`` (echoed again in the
terminal summary) and then asserts. Criteria 1, 4, and 8 state zero-crossing
and sampling-equality claims that the algorithm as defined does not meet;
they are implemented as stated, not weakened, and are expected to fail.
The decisions ledger in the repository notes records the analysis.
"""

import math
import random
import time

import numpy as np

from radial_explorer.animation import AnimationParams, animate, animate_tree
from radial_explorer.coords import from_drawing, to_drawing
from radial_explorer.experiments import (
    ExperimentConfig,
    filter_rows,
    mean_value,
    rows_to_csv,
    run_experiment_iso,
    run_experiment_siblen,
    run_experiment_span,
    RUNNERS,
)
from radial_explorer.graph import bfs_spanning_tree, generate_random_graph, reroot_tree
from radial_explorer.layout_pc import static_layout
from radial_explorer.metrics import (
    count_fan_crossings,
    count_transition_crossings,
)

from helpers import random_drawing, random_rooted_tree, random_tree_graph

REPORT_LINES: list[str] = []

DESK = ExperimentConfig(scale=10, seed=0)


def _report(criterion: int, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    REPORT_LINES.append(line)
    print(line)
    assert ok, line


def _random_graph_transition(rng: random.Random, n_max: int = 60):
    """One fresh-session transition over a connected random graph."""
    n = rng.randint(10, n_max)
    g = generate_random_graph(n, 0.1, rng.getrandbits(63))
    r1, r2 = rng.sample(range(n), 2)
    t1 = bfs_spanning_tree(g, r1)
    d1 = to_drawing(static_layout(t1))
    tl = animate(g, d1, r2)
    return g, t1, d1, r2, tl


def test_criterion_1_isomorphic_rerooting_crossing_counts():
    start = time.perf_counter()
    rows = run_experiment_iso(DESK)
    elapsed = time.perf_counter() - start

    pc = filter_rows(rows, algorithm="pc")
    nonzero = [r for r in pc if r.value != 0]
    yee_mean = mean_value(rows, algorithm="yee")
    ok = not nonzero and yee_mean > 0 and elapsed < 120.0
    _report(
        1,
        ok,
        f"parent-centered nonzero in {len(nonzero)}/{len(pc)} trials, "
        f"baseline mean {yee_mean:.1f}, {elapsed:.1f}s",
    )


def test_criterion_2_spanning_tree_transition_trends():
    rows = run_experiment_span(DESK)
    nf_pc = mean_value(rows, algorithm="pc", metric="nonfading")
    nf_yee = mean_value(rows, algorithm="yee", metric="nonfading")

    def gap(lo: int, hi: int) -> float:
        bucket = [r for r in rows if r.metric == "nonfading" and lo <= r.order <= hi]
        pc = [r.value for r in bucket if r.algorithm == "pc"]
        yee = [r.value for r in bucket if r.algorithm == "yee"]
        return sum(yee) / len(yee) - sum(pc) / len(pc)

    gap_low, gap_high = gap(30, 50), gap(81, 100)
    f_pc = mean_value(rows, algorithm="pc", metric="fading")
    f_yee = mean_value(rows, algorithm="yee", metric="fading")
    factor = max(f_pc, f_yee) / max(min(f_pc, f_yee), 1e-12)

    ok = nf_pc < nf_yee and gap_high > gap_low and factor <= 3.0
    _report(
        2,
        ok,
        f"nonfading means {nf_pc:.1f} < {nf_yee:.1f}, "
        f"gap {gap_low:.1f} -> {gap_high:.1f}, fading factor {factor:.2f}",
    )


def test_criterion_3_sibling_edge_length_uniformity():
    rows = run_experiment_siblen(DESK)
    pc = filter_rows(rows, algorithm="pc", metric="max_family_std")
    pc_bad = [r for r in pc if r.value > 1e-9]

    deep = {
        (r.order, r.graph_index) for r in rows if r.metric == "mean_length_depth_2"
    }
    yee = [
        r
        for r in filter_rows(rows, algorithm="yee", metric="max_family_std")
        if (r.order, r.graph_index) in deep
    ]
    varied = sum(1 for r in yee if r.value > 1e-9)
    fraction = varied / len(yee)

    ok = not pc_bad and fraction >= 0.5
    _report(
        3,
        ok,
        f"parent-centered family std <= 1e-9 in {len(pc) - len(pc_bad)}/{len(pc)} "
        f"trials, baseline varies in {fraction:.0%} of {len(yee)} deep trials",
    )


def test_criterion_4_tree_transition_planarity():
    rng = random.Random(4)
    dirty = 0
    trials = 1000
    for _ in range(trials):
        n = rng.randint(2, 60)
        g = random_tree_graph(n, rng)
        r1 = rng.randrange(n)
        r2 = rng.randrange(n)
        t1 = bfs_spanning_tree(g, r1)
        t2 = reroot_tree(t1, r2)
        d1 = to_drawing(static_layout(t1))
        tl = animate_tree(d1, t2, old_edges=t1.edges())
        report = count_transition_crossings(tl, t1.edges(), t2.edges(), samples=256)
        if report.total:
            dirty += 1
    ok = dirty == 0
    _report(
        4,
        ok,
        f"tree-edge crossings appeared in {dirty}/{trials} random tree transitions",
    )


def test_criterion_5_parent_child_fans_never_cross():
    rng = random.Random(5)
    dirty = 0
    trials = 1000
    for _ in range(trials):
        _, _, _, _, tl = _random_graph_transition(rng)
        if count_fan_crossings(tl, samples=256):
            dirty += 1
    ok = dirty == 0
    _report(
        5,
        ok,
        f"fan crossings appeared in {dirty}/{trials} random graph transitions",
    )


def test_criterion_6_round_trip_precision():
    rng = random.Random(6)
    worst = 0.0
    for _ in range(1000):
        n = rng.randint(1, 40)
        tree = random_rooted_tree(n, rng)
        d = random_drawing(sorted(tree.depth), rng)
        back = to_drawing(from_drawing(d, tree))
        for v, p in d.positions.items():
            worst = max(worst, math.dist(p, back.positions[v]))
    ok = worst < 1e-9
    _report(6, ok, f"max round-trip position error {worst:.3e}")


def test_criterion_7_animation_endpoints_and_root_path():
    rng = random.Random(7)
    worst_end = 0.0
    worst_line = 0.0
    for _ in range(100):
        g, _, d1, r2, tl = _random_graph_transition(rng)
        d_new = to_drawing(static_layout(bfs_spanning_tree(g, r2)))
        _, first = tl.frames[0]
        _, last = tl.frames[-1]
        for v, p in d1.positions.items():
            worst_end = max(worst_end, math.dist(p, first.positions[v]))
        for v, p in d_new.positions.items():
            worst_end = max(worst_end, math.dist(p, last.positions[v]))

        ax, ay = d1.positions[r2]
        seg = math.hypot(ax, ay)
        for _, frame in tl.frames:
            px, py = frame.positions[r2]
            residual = abs(ax * py - ay * px) / seg if seg > 1e-12 else math.hypot(px, py)
            worst_line = max(worst_line, residual)
    ok = worst_end < 1e-9 and worst_line < 1e-9
    _report(
        7,
        ok,
        f"max endpoint error {worst_end:.3e}, max root collinearity residual "
        f"{worst_line:.3e}",
    )


def test_criterion_8_sample_doubling_stability():
    rng = random.Random(8)
    changed = 0
    lost = 0
    trials = 100
    for _ in range(trials):
        g, t1, _, _, tl = _random_graph_transition(rng)
        new_edges = tl.evaluator.tree.edges()
        coarse = count_transition_crossings(tl, g.sorted_edges, new_edges, samples=256)
        fine = count_transition_crossings(tl, g.sorted_edges, new_edges, samples=512)
        if (coarse.fading, coarse.nonfading, coarse.pairs) != (
            fine.fading,
            fine.nonfading,
            fine.pairs,
        ):
            changed += 1
        if set(coarse.pairs) - set(fine.pairs):
            lost += 1
    ok = changed == 0
    _report(
        8,
        ok,
        f"doubling 256->512 changed {changed}/{trials} reports "
        f"(all additively; {lost} ever lost a pair)",
    )


def test_criterion_9_experiment_determinism():
    cfg = ExperimentConfig(orders=(30, 40), graphs_per_order=1, seed=123)
    mismatches = [
        name for name, runner in sorted(RUNNERS.items())
        if rows_to_csv(runner(cfg)) != rows_to_csv(runner(cfg))
    ]
    ok = not mismatches
    _report(
        9,
        ok,
        "byte-identical CSV for iso, span, siblen reruns"
        if ok
        else f"CSV mismatch in {mismatches}",
    )

"""Command-line interface tests. Commands run in-process via cli.main."""

import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from radial_explorer import cli
from radial_explorer.animation import timeline_from_jsonl
from radial_explorer.coords import drawing_from_json, to_drawing
from radial_explorer.experiments import ExperimentConfig, rows_to_csv, run_experiment_iso
from radial_explorer.graph import bfs_spanning_tree, graph_from_json
from radial_explorer.layout_pc import static_layout

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv) -> int:
    return cli.main([str(a) for a in argv])


def write_graph(path: Path, n: int, edges) -> Path:
    payload = {"nodes": [{"id": v} for v in range(n)], "edges": [list(e) for e in edges]}
    path.write_text(json.dumps(payload))
    return path


@pytest.fixture
def square(tmp_path):
    return write_graph(tmp_path / "g.json", 4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestUsageErrors:
    def test_no_subcommand_exits_1(self):
        with pytest.raises(SystemExit) as exc:
            run_cli()
        assert exc.value.code == 1

    def test_unknown_flag_exits_1(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("generate", "--n", "4", "--frobnicate")
        assert exc.value.code == 1

    def test_malformed_orders_exits_1(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("experiment", "iso", "--orders", "30-100")
        assert exc.value.code == 1


class TestGenerate:
    def test_writes_connected_graph(self, tmp_path):
        out = tmp_path / "g.json"
        assert run_cli("generate", "--n", 12, "--edge-prob", 0.3,
                       "--seed", 4, "--output", out) == 0
        g = graph_from_json(json.loads(out.read_text()))
        assert g.node_count == 12
        assert bfs_spanning_tree(g, 0).depth.keys() == set(range(12))

    def test_same_invocation_same_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run_cli("generate", "--n", 9, "--seed", 7, "--edge-prob", 0.5, "--output", a)
        run_cli("generate", "--n", 9, "--seed", 7, "--edge-prob", 0.5, "--output", b)
        assert a.read_bytes() == b.read_bytes()

    def test_env_seed_fallback(self, tmp_path, monkeypatch):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        monkeypatch.setenv(cli.ENV_SEED, "31")
        run_cli("generate", "--n", 9, "--edge-prob", 0.5, "--output", a)
        monkeypatch.delenv(cli.ENV_SEED)
        run_cli("generate", "--n", 9, "--edge-prob", 0.5, "--seed", 31, "--output", b)
        assert a.read_bytes() == b.read_bytes()

    def test_bad_env_seed_is_data_error(self, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.ENV_SEED, "not-a-number")
        assert run_cli("generate", "--n", 4, "--output", tmp_path / "g.json") == 2


class TestLayout:
    def test_k2_child_at_root_radius(self, tmp_path):
        g = write_graph(tmp_path / "k2.json", 2, [(0, 1)])
        out = tmp_path / "d.json"
        assert run_cli("layout", "--graph", g, "--root", 0, "--output", out) == 0
        d = drawing_from_json(json.loads(out.read_text()))
        assert math.dist(d.positions[0], d.positions[1]) == pytest.approx(100.0, abs=1e-9)

    def test_square_matches_library_composition(self, square, tmp_path):
        out = tmp_path / "d.json"
        run_cli("layout", "--graph", square, "--root", 0, "--output", out)
        d = drawing_from_json(json.loads(out.read_text()))
        expect = to_drawing(static_layout(bfs_spanning_tree(
            graph_from_json(json.loads(square.read_text())), 0)))
        for v, p in expect.positions.items():
            assert d.positions[v] == pytest.approx(p, abs=1e-12)

    def test_same_invocation_identical_files(self, square, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run_cli("layout", "--graph", square, "--root", 0, "--output", a)
        run_cli("layout", "--graph", square, "--root", 0, "--output", b)
        assert a.read_bytes() == b.read_bytes()

    def test_yee_layout_rings(self, square, tmp_path):
        out = tmp_path / "d.json"
        run_cli("layout", "--graph", square, "--root", 0, "--algorithm", "yee",
                "--root-radius", 50, "--output", out)
        d = drawing_from_json(json.loads(out.read_text()))
        assert math.hypot(*d.positions[0]) == pytest.approx(0.0, abs=1e-12)
        assert math.hypot(*d.positions[1]) == pytest.approx(50.0, abs=1e-9)
        assert math.hypot(*d.positions[2]) == pytest.approx(100.0, abs=1e-9)

    def test_missing_graph_file_is_data_error(self, tmp_path):
        assert run_cli("layout", "--graph", tmp_path / "nope.json", "--root", 0) == 2

    def test_invalid_json_is_data_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_cli("layout", "--graph", bad, "--root", 0) == 2

    def test_unknown_root_is_data_error(self, square):
        assert run_cli("layout", "--graph", square, "--root", 9) == 2


class TestAnimate:
    def test_timeline_round_trips(self, square, tmp_path):
        d_path, out = tmp_path / "d.json", tmp_path / "tl.jsonl"
        run_cli("layout", "--graph", square, "--root", 0, "--output", d_path)
        assert run_cli("animate", "--graph", square, "--new-root", 2,
                       "--drawing", d_path, "--steps", 6, "--output", out) == 0
        tl = timeline_from_jsonl(out.read_text())
        assert len(tl.frames) == 8
        assert tl.frames[0][0] == 0.0 and tl.frames[-1][0] == 1.0

    def test_default_start_is_seeded_force_layout(self, square, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        run_cli("animate", "--graph", square, "--new-root", 1, "--seed", 3, "--output", a)
        run_cli("animate", "--graph", square, "--new-root", 1, "--seed", 3, "--output", b)
        assert a.read_bytes() == b.read_bytes()


class TestExperiment:
    def test_csv_matches_library_and_writes_manifest(self, tmp_path):
        out = tmp_path / "r.csv"
        assert run_cli("experiment", "iso", "--orders", "8..10", "--graphs-per-order", 1,
                       "--edge-prob", 0.4, "--seed", 1, "--output", out) == 0
        cfg = ExperimentConfig(orders=(8, 10), graphs_per_order=1, edge_prob=0.4, seed=1)
        assert out.read_text() == rows_to_csv(run_experiment_iso(cfg))
        manifest = json.loads((tmp_path / "r.csv.manifest.json").read_text())
        assert manifest["experiment"] == "iso"
        assert manifest["config"]["seed"] == 1

    def test_rerun_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ("experiment", "span", "--orders", "8..9", "--graphs-per-order", 1,
                "--edge-prob", 0.4, "--seed", 2)
        run_cli(*args, "--output", a)
        run_cli(*args, "--output", b)
        assert a.read_bytes() == b.read_bytes()

    def test_desk_scale_iso_row_count(self, tmp_path):
        # 71 orders x 1 graph x 2 algorithms
        out = tmp_path / "iso.csv"
        assert run_cli("experiment", "iso", "--scale", 10, "--seed", 7,
                       "--output", out) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 142


class TestExportSvg:
    def test_single_node_single_circle(self, tmp_path):
        g = write_graph(tmp_path / "one.json", 1, [])
        d_path, t_path, out = tmp_path / "d.json", tmp_path / "t.json", tmp_path / "o.svg"
        run_cli("layout", "--graph", g, "--root", 0, "--output", d_path,
                "--tree-output", t_path)
        assert run_cli("export-svg", "--drawing", d_path, "--tree", t_path,
                       "--output", out) == 0
        svg = out.read_text()
        assert svg.count("<circle") == 1
        assert "<line" not in svg

    def test_k2_single_line(self, tmp_path):
        g = write_graph(tmp_path / "k2.json", 2, [(0, 1)])
        d_path, t_path, out = tmp_path / "d.json", tmp_path / "t.json", tmp_path / "o.svg"
        run_cli("layout", "--graph", g, "--root", 0, "--output", d_path,
                "--tree-output", t_path)
        run_cli("export-svg", "--drawing", d_path, "--tree", t_path, "--output", out)
        assert out.read_text().count("<line") == 1

    def test_golden_square(self, tmp_path):
        d_path, t_path, out = tmp_path / "d.json", tmp_path / "t.json", tmp_path / "o.svg"
        run_cli("layout", "--graph", GOLDEN / "four_cycle_graph.json", "--root", 0,
                "--output", d_path, "--tree-output", t_path)
        run_cli("export-svg", "--drawing", d_path, "--tree", t_path, "--output", out)
        assert out.read_text() == (GOLDEN / "four_cycle.svg").read_text()

    def test_mismatched_node_sets_is_data_error(self, tmp_path):
        d_path = tmp_path / "d.json"
        d_path.write_text(json.dumps({"positions": {"0": [0, 0]}}))
        t_path = tmp_path / "t.json"
        t_path.write_text(json.dumps({"root": 0, "children": {"0": [1], "1": []}}))
        assert run_cli("export-svg", "--drawing", d_path, "--tree", t_path) == 2


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        out = tmp_path / "g.json"
        proc = subprocess.run(
            [sys.executable, "-m", "radial_explorer.cli", "generate",
             "--n", "5", "--seed", "1", "--output", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert json.loads(out.read_text())["nodes"]

    def test_module_usage_error_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "radial_explorer.cli", "layout", "--bogus"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 1

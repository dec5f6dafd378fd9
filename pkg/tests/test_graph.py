import random

import pytest

from radial_explorer.graph import (
    Graph,
    GraphError,
    bfs_spanning_tree,
    generate_random_graph,
    graph_from_json,
    graph_to_json,
    reroot_tree,
    tree_from_json,
    tree_to_json,
)

from helpers import bfs_distances, random_tree_graph


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def four_cycle():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0), (0, 1)])

    def test_rejects_duplicate_edges(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_disconnected(self):
        with pytest.raises(GraphError):
            Graph.from_edges(4, [(0, 1), (2, 3)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 5)])

    def test_single_node_is_connected(self):
        g = Graph.from_edges(1, [])
        assert g.node_count == 1
        assert g.edges == frozenset()

    def test_neighbors_sorted(self):
        g = Graph.from_edges(4, [(2, 0), (0, 3), (0, 1)])
        assert g.neighbors(0) == (1, 2, 3)


class TestGenerateRandomGraph:
    def test_k2_forced_by_p_one(self):
        for seed in (0, 7, 123456):
            g = generate_random_graph(2, 1.0, seed)
            assert g.edges == frozenset({(0, 1)})

    def test_single_node(self):
        g = generate_random_graph(1, 0.5, 3)
        assert g.node_count == 1 and not g.edges

    def test_seed_42_order_30_connected_by_reachability_oracle(self):
        g = generate_random_graph(30, 0.1, seed=42)
        dist = bfs_distances(set(g.edges), 30, 0)
        assert len(dist) == 30
        # Edge-count plausibility: Binomial(435, 0.1) stays well inside [10, 100].
        assert 10 <= len(g.edges) <= 100

    def test_deterministic_per_seed(self):
        rng = random.Random(1)
        for _ in range(20):
            n = rng.randint(2, 100)
            seed = rng.getrandbits(64)
            a = generate_random_graph(n, 0.1, seed)
            b = generate_random_graph(n, 0.1, seed)
            assert a.edges == b.edges
            assert len(bfs_distances(set(a.edges), n, 0)) == n

    def test_attempt_bound(self):
        with pytest.raises(GraphError):
            generate_random_graph(40, 0.0, seed=0, max_attempts=25)


class TestBfsSpanningTree:
    def test_path_is_its_own_tree(self):
        t = bfs_spanning_tree(path_graph(3), 0)
        assert t.parent == {1: 0, 2: 1}

    def test_star_children_in_ascending_order(self):
        g = Graph.from_edges(5, [(0, k) for k in (3, 1, 4, 2)])
        t = bfs_spanning_tree(g, 0)
        assert t.children[0] == (1, 2, 3, 4)
        assert all(t.depth[k] == 1 for k in (1, 2, 3, 4))

    def test_four_cycle_hand_trace(self):
        t = bfs_spanning_tree(four_cycle(), 0)
        assert t.edges() == frozenset({(0, 1), (0, 3), (1, 2)})

    def test_invalid_root(self):
        with pytest.raises(GraphError):
            bfs_spanning_tree(path_graph(3), 9)

    def test_depth_equals_shortest_path_distance(self):
        rng = random.Random(99)
        for _ in range(25):
            n = rng.randint(2, 40)
            g = generate_random_graph(n, 0.25, rng.getrandbits(32))
            root = rng.randrange(n)
            t = bfs_spanning_tree(g, root)
            assert t.depth == bfs_distances(set(g.edges), n, root)


class TestRerootTree:
    def test_reroot_at_root_is_identity(self):
        t = bfs_spanning_tree(four_cycle(), 0)
        assert reroot_tree(t, 0) == t

    def test_path_reversal(self):
        t = bfs_spanning_tree(path_graph(3), 0)
        r = reroot_tree(t, 2)
        assert r.parent == {1: 2, 0: 1}
        assert r.depth == {2: 0, 1: 1, 0: 2}

    def test_former_parent_appended_last(self):
        # 3 has children [1, 5] under root 0; after re-rooting at 3 the former
        # parent 0 must come after them.
        g = Graph.from_edges(6, [(0, 3), (3, 1), (3, 5), (1, 2), (1, 4)])
        t = bfs_spanning_tree(g, 0)
        assert t.children[3] == (1, 5)
        r = reroot_tree(t, 3)
        assert r.children[3] == (1, 5, 0)
        assert r.children[0] == ()

    def test_edge_set_preserved_on_random_trees(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(2, 60)
            g = random_tree_graph(n, rng)
            t = bfs_spanning_tree(g, rng.randrange(n))
            r = reroot_tree(t, rng.randrange(n))
            assert r.edges() == t.edges()
            assert r.depth[r.root] == 0

    def test_invalid_node(self):
        t = bfs_spanning_tree(path_graph(3), 0)
        with pytest.raises(GraphError):
            reroot_tree(t, 17)


class TestSerialization:
    def test_graph_round_trip(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)], labels={0: "a"})
        assert graph_from_json(graph_to_json(g)) == g

    def test_loader_rejects_bad_payloads(self):
        base = graph_to_json(path_graph(3))
        for broken in (
            {**base, "edges": [[0, 0]]},
            {**base, "edges": [[0, 1], [1, 0], [1, 2]]},
            {**base, "edges": [[0, 1]]},  # disconnected
            {**base, "nodes": [{"id": 0}, {"id": 2}, {"id": 3}]},
            {"edges": []},
            [],
        ):
            with pytest.raises(GraphError):
                graph_from_json(broken)

    def test_tree_round_trip_preserves_child_order(self):
        rng = random.Random(11)
        g = random_tree_graph(12, rng)
        t = bfs_spanning_tree(g, 4)
        back = tree_from_json(tree_to_json(t))
        assert back == t

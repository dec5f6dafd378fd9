"""Graph representation, seeded random generation, BFS spanning trees, re-rooting."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

Edge = tuple[int, int]

MAX_GENERATION_ATTEMPTS = 10_000


class GraphError(ValueError):
    """Structurally invalid graph, tree, or serialized payload."""


class DisconnectedGraphError(GraphError):
    """Well-formed graph whose nodes are not all mutually reachable."""


def normalize_edge(a: int, b: int) -> Edge:
    """Canonical (low, high) form of an unordered node pair."""
    if a == b:
        raise GraphError(f"self-loop at node {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Undirected connected graph over node ids 0..node_count-1.

    Immutable after construction; construction fails on self-loops,
    out-of-range ids, or a disconnected edge set.
    """

    node_count: int
    edges: frozenset[Edge]
    labels: dict[int, str] = field(default_factory=dict)
    _adjacency: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise GraphError(f"node_count must be >= 1, got {self.node_count}")
        neighbor_sets: list[set[int]] = [set() for _ in range(self.node_count)]
        for edge in self.edges:
            a, b = edge
            if not (0 <= a < b < self.node_count):
                raise GraphError(f"edge {edge} is not a canonical in-range pair")
            neighbor_sets[a].add(b)
            neighbor_sets[b].add(a)
        for node in self.labels:
            if not (0 <= node < self.node_count):
                raise GraphError(f"label attached to unknown node {node}")
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbor_sets)
        object.__setattr__(self, "_adjacency", adjacency)
        if self._reachable_from(0) != self.node_count:
            raise DisconnectedGraphError("graph is disconnected")

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: object,
        labels: dict[int, str] | None = None,
    ) -> Graph:
        """Build a graph from arbitrary (a, b) pairs, rejecting duplicates."""
        normalized = [normalize_edge(a, b) for a, b in edges]  # type: ignore[union-attr]
        edge_set = frozenset(normalized)
        if len(edge_set) != len(normalized):
            raise GraphError("duplicate edges")
        return cls(node_count, edge_set, dict(labels or {}))

    def _reachable_from(self, start: int) -> int:
        seen = [False] * self.node_count
        seen[start] = True
        stack = [start]
        count = 1
        while stack:
            v = stack.pop()
            for w in self._adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count

    def neighbors(self, node: int) -> tuple[int, ...]:
        """Neighbor ids of ``node`` in ascending order."""
        self._check_node(node)
        return self._adjacency[node]

    def _check_node(self, node: int) -> None:
        if not (0 <= node < self.node_count):
            raise GraphError(f"node {node} out of range for {self.node_count} nodes")

    @property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return normalize_edge(a, b) in self.edges


@dataclass(frozen=True)
class RootedTree:
    """Rooted spanning tree with ordered child lists and per-node depths."""

    root: int
    parent: dict[int, int]
    children: dict[int, tuple[int, ...]]
    depth: dict[int, int]

    def __post_init__(self) -> None:
        nodes = set(self.depth)
        if self.root not in nodes or self.depth[self.root] != 0:
            raise GraphError("root missing or at nonzero depth")
        if self.root in self.parent:
            raise GraphError("root must not have a parent")
        if set(self.parent) != nodes - {self.root}:
            raise GraphError("every non-root node needs exactly one parent")
        if set(self.children) != nodes:
            raise GraphError("children map must cover every node")
        for v, kids in self.children.items():
            for k in kids:
                if self.parent.get(k) != v:
                    raise GraphError(f"child list of {v} disagrees with parent map")
                if self.depth[k] != self.depth[v] + 1:
                    raise GraphError(f"depth of {k} is not depth({v}) + 1")
        # Every node must be reachable from the root through the child lists.
        visited = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            visited += 1
            stack.extend(self.children[v])
        if visited != len(nodes):
            raise GraphError("child lists do not span the node set")

    @property
    def node_count(self) -> int:
        return len(self.depth)

    @property
    def nodes(self) -> list[int]:
        return sorted(self.depth)

    def edges(self) -> frozenset[Edge]:
        """Tree edges as canonical unordered pairs."""
        return frozenset(normalize_edge(v, p) for v, p in self.parent.items())

    def iter_breadth_first(self) -> list[int]:
        """Nodes in root-to-leaves order, siblings in stored child order."""
        order = [self.root]
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            for k in self.children[v]:
                order.append(k)
                queue.append(k)
        return order

    def max_depth(self) -> int:
        return max(self.depth.values())


def generate_random_graph(
    n: int,
    p_edge: float,
    seed: int,
    max_attempts: int = MAX_GENERATION_ATTEMPTS,
) -> Graph:
    """Seeded Erdos-Renyi G(n, p) sample, regenerated until connected.

    Each unordered pair is included independently with probability ``p_edge``.
    A disconnected sample is retried with ``seed + 1`` (then +2, ...) so the
    node count stays exact; identical arguments always produce an identical
    graph.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if not 0.0 <= p_edge <= 1.0:
        raise GraphError(f"p_edge must be in [0, 1], got {p_edge}")
    for attempt in range(max_attempts):
        rng = random.Random(seed + attempt)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p_edge
        ]
        try:
            return Graph.from_edges(n, edges)
        except GraphError:
            continue
    raise GraphError(
        f"no connected G({n}, {p_edge}) sample within {max_attempts} attempts; "
        "p_edge is too small for this n"
    )


def bfs_spanning_tree(g: Graph, root: int) -> RootedTree:
    """Breadth-first spanning tree; neighbors visited in ascending id order."""
    g._check_node(root)
    parent: dict[int, int] = {}
    children: dict[int, list[int]] = {v: [] for v in range(g.node_count)}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                children[v].append(w)
                queue.append(w)
    return RootedTree(
        root=root,
        parent=parent,
        children={v: tuple(kids) for v, kids in children.items()},
        depth=depth,
    )


def reroot_tree(t: RootedTree, new_root: int) -> RootedTree:
    """Re-root a tree without changing its undirected edge set.

    Parent pointers are reversed along the old-root-to-new-root path; each
    flipped node keeps its child order and gains its former parent as the
    last child.
    """
    if new_root not in t.depth:
        raise GraphError(f"node {new_root} is not in the tree")
    if new_root == t.root:
        return t

    path = [new_root]
    while path[-1] != t.root:
        path.append(t.parent[path[-1]])

    parent = dict(t.parent)
    children = {v: list(kids) for v, kids in t.children.items()}
    for node, former_parent in zip(path, path[1:]):
        parent[former_parent] = node
        children[former_parent].remove(node)
        children[node].append(former_parent)
    del parent[new_root]

    depth = {new_root: 0}
    queue = deque([new_root])
    while queue:
        v = queue.popleft()
        for k in children[v]:
            depth[k] = depth[v] + 1
            queue.append(k)

    return RootedTree(
        root=new_root,
        parent=parent,
        children={v: tuple(kids) for v, kids in children.items()},
        depth=depth,
    )


def graph_to_json(g: Graph) -> dict:
    """Graph file payload: ``{"nodes": [{"id", "label"?}], "edges": [[a, b]]}``."""
    nodes = []
    for v in range(g.node_count):
        entry: dict = {"id": v}
        if v in g.labels:
            entry["label"] = g.labels[v]
        nodes.append(entry)
    return {"nodes": nodes, "edges": [list(e) for e in g.sorted_edges]}


def graph_from_json(payload: object) -> Graph:
    """Parse and validate the graph file format; rejects malformed payloads."""
    if not isinstance(payload, dict):
        raise GraphError("graph payload must be a JSON object")
    nodes = payload.get("nodes")
    edges = payload.get("edges")
    if not isinstance(nodes, list) or not nodes:
        raise GraphError("graph payload needs a non-empty 'nodes' list")
    if not isinstance(edges, list):
        raise GraphError("graph payload needs an 'edges' list")
    ids: set[int] = set()
    labels: dict[int, str] = {}
    for entry in nodes:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), int):
            raise GraphError(f"malformed node entry: {entry!r}")
        node = entry["id"]
        if node in ids:
            raise GraphError(f"duplicate node id {node}")
        ids.add(node)
        label = entry.get("label")
        if label is not None:
            if not isinstance(label, str):
                raise GraphError(f"label of node {node} must be a string")
            labels[node] = label
    n = len(ids)
    if ids != set(range(n)):
        raise GraphError("node ids must be exactly 0..n-1")
    pairs = []
    for item in edges:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(x, int) for x in item)
        ):
            raise GraphError(f"malformed edge entry: {item!r}")
        pairs.append((item[0], item[1]))
    return Graph.from_edges(n, pairs, labels)


def tree_to_json(t: RootedTree) -> dict:
    """Tree file payload: root plus ordered child lists for every node."""
    return {
        "root": t.root,
        "children": {str(v): list(t.children[v]) for v in sorted(t.children)},
    }


def tree_from_json(payload: object) -> RootedTree:
    if not isinstance(payload, dict):
        raise GraphError("tree payload must be a JSON object")
    root = payload.get("root")
    raw_children = payload.get("children")
    if not isinstance(root, int) or not isinstance(raw_children, dict):
        raise GraphError("tree payload needs 'root' and 'children'")
    children: dict[int, tuple[int, ...]] = {}
    for key, kids in raw_children.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise GraphError(f"non-integer node key {key!r}") from exc
        if not isinstance(kids, list) or not all(isinstance(k, int) for k in kids):
            raise GraphError(f"malformed child list for node {key}")
        children[v] = tuple(kids)
    parent: dict[int, int] = {}
    for v, kids in children.items():
        for k in kids:
            if k in parent:
                raise GraphError(f"node {k} has two parents")
            parent[k] = v
    depth: dict[int, int] = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for k in children.get(v, ()):
            depth[k] = depth[v] + 1
            queue.append(k)
    return RootedTree(root=root, parent=parent, children=children, depth=depth)

"""Shared test utilities: small independent oracles and random structures."""

from __future__ import annotations

import random
from collections import deque

from radial_explorer.graph import Graph, RootedTree, bfs_spanning_tree


def bfs_distances(edges: set[tuple[int, int]], n: int, start: int) -> dict[int, int]:
    """Independent shortest-path-by-edges oracle over an explicit edge set."""
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def random_tree_graph(n: int, rng: random.Random) -> Graph:
    """Random labelled tree: random attachment over a shuffled id order."""
    ids = list(range(n))
    rng.shuffle(ids)
    edges = []
    for i in range(1, n):
        j = rng.randrange(i)
        edges.append((ids[i], ids[j]))
    return Graph.from_edges(n, edges)


def random_rooted_tree(n: int, rng: random.Random) -> RootedTree:
    g = random_tree_graph(n, rng)
    return bfs_spanning_tree(g, rng.randrange(n))


def random_drawing(nodes: list[int], rng: random.Random, span: float = 100.0):
    from radial_explorer.coords import Drawing

    return Drawing(
        {v: (rng.uniform(-span, span), rng.uniform(-span, span)) for v in nodes}
    )

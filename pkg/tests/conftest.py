"""Shared helpers: small-graph enumerators and independent oracles.

The oracles here deliberately avoid the library's own algorithms so
they can catch systematic mistakes: separator checks run on plain
adjacency sets, lattice distances come from multi-source BFS.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

import pytest

from raagsplit.graphs import Graph


def mask_graph(n: int, mask: int, prefix: str = "v") -> Graph:
    """Graph on n labeled vertices from an edge bitmask over the
    C(n, 2) index pairs in lexicographic order."""
    labels = [f"{prefix}{i}" for i in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    edges = [
        (labels[i], labels[j]) for k, (i, j) in enumerate(pairs) if mask >> k & 1
    ]
    return Graph(labels, edges)


def all_graphs(n: int):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield mask_graph(n, mask)


def connected_graphs(n: int):
    return (g for g in all_graphs(n) if g.is_connected())


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.choice((0.2, 0.35, 0.5, 0.7))
    labels = [f"v{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(labels, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n)
        if g.is_connected():
            return g


def adjacency_sets(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for i, j in g.edges():
        adj[i].add(j)
        adj[j].add(i)
    return adj


def separates_oracle(g: Graph, cut) -> bool:
    """Reference separation check with set-based BFS."""
    adj = adjacency_sets(g)
    cut = set(cut)
    rest = [v for v in range(g.n) if v not in cut]
    if not rest:
        return False
    seen = {rest[0]}
    queue = deque([rest[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in cut and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) < len(rest)


def minimal_clique_separators_oracle(g: Graph):
    """Exhaustive reference: clique subsets that separate, keeping the
    inclusion-minimal ones."""
    if g.n and not g.is_connected():
        return [()]
    seps = []
    verts = range(g.n)
    for size in range(g.n):
        for cand in itertools.combinations(verts, size):
            if not g.is_clique(cand):
                continue
            if not separates_oracle(g, cand):
                continue
            if any(set(s) <= set(cand) for s in seps):
                continue
            seps.append(cand)
    return sorted(seps)


# lattice reference: multi-source BFS inside the box is exact for the
# ℓ¹ metric because coordinate-monotone paths never leave the box

def box_points(n: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=n)


def bfs_distances(n: int, radius: int, sources) -> dict:
    dist = {p: 0 for p in sources}
    queue = deque(dist)
    while queue:
        p = queue.popleft()
        for axis in range(n):
            for step in (-1, 1):
                q = list(p)
                q[axis] += step
                q = tuple(q)
                if abs(q[axis]) <= radius and q not in dist:
                    dist[q] = dist[p] + 1
                    queue.append(q)
    return dist


def grid_components(points: set):
    comps = []
    left = set(points)
    while left:
        start = left.pop()
        comp = {start}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for axis in range(len(p)):
                for step in (-1, 1):
                    q = list(p)
                    q[axis] += step
                    q = tuple(q)
                    if q in left:
                        left.remove(q)
                        comp.add(q)
                        queue.append(q)
        comps.append(comp)
    return comps


@pytest.fixture
def rng():
    return random.Random(0xA4A6)

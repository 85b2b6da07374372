"""Seeded random instance generators for property suites and reproduction runs."""

from __future__ import annotations

import heapq
import random
from itertools import combinations

from .graph import Edge, TemporalGraph
from .reach import all_pairs


def random_tree_edges(rng: random.Random, n: int) -> list[Edge]:
    """Uniform labeled tree on 1..n (Pruefer decode)."""
    if n <= 1:
        return []
    if n == 2:
        return [(1, 2)]
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(leaves)
    edges.append((u, v))
    return edges


def _growing_layers(rng: random.Random, edges: list[Edge], tau: int) -> list[tuple[Edge, ...]]:
    birth = {e: rng.randint(1, tau) for e in edges}
    return [tuple(e for e in edges if birth[e] <= t) for t in range(1, tau + 1)]


def _shrinking_layers(rng: random.Random, edges: list[Edge], tau: int) -> list[tuple[Edge, ...]]:
    # an edge dying at time t is absent from layer t onward; tau + 1 = survives
    death = {}
    for e in edges:
        death[e] = rng.randint(2, tau) if tau >= 2 and rng.random() < 0.4 else tau + 1
    return [tuple(e for e in edges if death[e] > t) for t in range(1, tau + 1)]


def random_temporal_tree(
    rng: random.Random, n_max: int = 12, tau_max: int = 4
) -> TemporalGraph:
    """Temporally connected temporal tree, n <= n_max, tau <= tau_max.

    Tries a few arbitrary layer patterns (accepted only when all pairs stay
    reachable) and falls back to a growing pattern, which is always
    temporally connected on a connected underlying graph.
    """
    n = rng.randint(1, n_max)
    tau = rng.randint(1, tau_max)
    edges = random_tree_edges(rng, n)
    for _ in range(8):
        if not edges or rng.random() < 0.5:
            break
        layers = []
        for _t in range(tau):
            layers.append(tuple(e for e in edges if rng.random() < 0.7))
        anchor = rng.randrange(tau)
        layers[anchor] = tuple(edges)
        g = TemporalGraph(n, tuple(layers))
        if all_pairs(g).all_finite():
            return g
    return TemporalGraph(n, tuple(_growing_layers(rng, edges, tau)))


def random_shrinking_kpartite(
    rng: random.Random, k: int, n_max: int = 12, tau_max: int = 4
) -> TemporalGraph:
    """Monotonically shrinking complete k-partite instance."""
    n = rng.randint(max(k, 2), n_max)
    part_of = {v: v for v in range(1, k + 1)}
    for v in range(k + 1, n + 1):
        part_of[v] = rng.randint(1, k)
    edges = [
        (u, v)
        for u, v in combinations(range(1, n + 1), 2)
        if part_of[u] != part_of[v]
    ]
    tau = rng.randint(1, tau_max)
    return TemporalGraph(n, tuple(_shrinking_layers(rng, edges, tau)))


def random_shrinking_threshold(
    rng: random.Random, n_max: int = 12, tau_max: int = 4
) -> TemporalGraph:
    """Monotonically shrinking threshold instance built from a creation sequence."""
    n = rng.randint(1, n_max)
    edges: list[Edge] = []
    for v in range(2, n + 1):
        if rng.random() < 0.5:  # v arrives dominating, else isolated
            edges.extend((u, v) for u in range(1, v))
    tau = rng.randint(1, tau_max)
    return TemporalGraph(n, tuple(_shrinking_layers(rng, edges, tau)))


def random_shrinking_split(
    rng: random.Random, n_max: int = 12, tau_max: int = 4
) -> TemporalGraph:
    """Monotonically shrinking split instance with a clique of size >= 2."""
    c = rng.randint(2, max(2, n_max - 2))
    i = rng.randint(0, n_max - c)
    n = c + i
    edges = [tuple(e) for e in combinations(range(1, c + 1), 2)]
    for v in range(c + 1, n + 1):
        for u in range(1, c + 1):
            if rng.random() < 0.45:
                edges.append((u, v))
    tau = rng.randint(1, tau_max)
    return TemporalGraph(n, tuple(_shrinking_layers(rng, edges, tau)))


def random_temporal_graph(
    rng: random.Random, n_max: int = 9, tau_max: int = 3
) -> TemporalGraph:
    """Arbitrary temporal graph with independently sampled layers."""
    n = rng.randint(1, n_max)
    tau = rng.randint(1, tau_max)
    p = rng.uniform(0.05, 0.5)
    layers = []
    for _t in range(tau):
        layers.append(
            tuple(e for e in combinations(range(1, n + 1), 2) if rng.random() < p)
        )
    return TemporalGraph(n, tuple(layers))

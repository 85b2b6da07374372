"""Constructive equilibrium builders and distance-preserving completions.

The builders return a concrete equilibrium profile for graph classes where
one is guaranteed; every builder re-checks its output with
:func:`tempvor.games.is_nash` before returning, so a violated guarantee
surfaces as an error instead of a wrong answer. The completions extend a
temporally connected instance with late layers that cannot change any
original distance (a walk finishing after the saturation time is never
foremost).
"""

from __future__ import annotations

from itertools import combinations

from .classify import is_threshold, is_tree, kpartite_parts, split_partition
from .games import Profile, best_response_dynamics, enumerate_nash, is_nash
from .graph import StaticGraph, TemporalGraph, is_monotone, underlying
from .instances import build_instance
from .reach import DistanceMatrix, all_pairs


def _verified(g: TemporalGraph, d: DistanceMatrix, kind: str, profile: Profile) -> Profile:
    check = is_nash(g, d, kind, profile)
    if not check:
        raise RuntimeError(
            f"constructed profile {profile} is not an equilibrium for {kind}: "
            f"{check.deviation}"
        )
    return profile


def _component_sizes_without(s: StaticGraph, v: int) -> dict[int, int]:
    """For each neighbor of v, the size of its component in s - v (s a tree)."""
    sizes = {}
    for start in s.neighbors(v):
        seen = {v, start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in s.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        sizes[start] = len(seen) - 1
    return sizes


def tree_ne(g: TemporalGraph) -> Profile:
    """Equilibrium for the reverse game on a temporally connected tree.

    Player 1 takes a centroid (smallest id on ties); player 2 takes the
    smallest-id neighbor lying in a maximum-size component of the tree minus
    the centroid. Every vertex outside that component reaches player 1
    strictly first, everything inside reaches player 2 first, which pins the
    payoffs at u1 >= n/2 >= u2.
    """
    s = underlying(g)
    if not is_tree(s):
        raise ValueError("underlying graph is not a tree")
    d = all_pairs(g)
    if not d.all_finite():
        raise ValueError("graph is not temporally connected")
    if g.n == 1:
        return _verified(g, d, "rvor", (1, 1))
    best_vertex, best_load = None, None
    comp_sizes: dict[int, dict[int, int]] = {}
    for v in g.vertices:
        sizes = _component_sizes_without(s, v)
        comp_sizes[v] = sizes
        load = max(sizes.values())
        if best_load is None or load < best_load:
            best_vertex, best_load = v, load
    p1 = best_vertex
    sizes = comp_sizes[p1]
    p2 = min(w for w, size in sizes.items() if size == best_load)
    return _verified(g, d, "rvor", (p1, p2))


def kpartite_shrink_ne(g: TemporalGraph) -> Profile:
    """Equilibrium for the reverse game on a shrinking complete k-partite graph.

    Shrinking forces layer 1 to equal the underlying graph, so the whole game
    is decided by first-layer adjacency: picking the smallest vertices of the
    first two parts (parts ordered by smallest member) leaves neither player
    a profitable move.
    """
    parts = kpartite_parts(underlying(g))
    if parts is None or len(parts) < 2:
        raise ValueError("underlying graph is not complete k-partite with k >= 2")
    _, shrinking = is_monotone(g)
    if not shrinking:
        raise ValueError("graph is not monotonically shrinking")
    d = all_pairs(g)
    return _verified(g, d, "rvor", (min(parts[0]), min(parts[1])))


def threshold_shrink_ne(g: TemporalGraph) -> Profile:
    """Equilibrium for the reverse game on a shrinking threshold graph.

    If the first layer is edgeless any profile works and (1,2) is returned;
    otherwise player 1 takes the smallest vertex dominating all non-isolated
    first-layer vertices (one always exists in a threshold graph) and player 2
    the smallest other vertex.
    """
    s = underlying(g)
    if not is_threshold(s):
        raise ValueError("underlying graph is not a threshold graph")
    _, shrinking = is_monotone(g)
    if not shrinking:
        raise ValueError("graph is not monotonically shrinking")
    d = all_pairs(g)
    if g.n == 1:
        return _verified(g, d, "rvor", (1, 1))
    non_isolated = {v for v in s.vertices if s.degree(v) > 0}
    if not non_isolated:
        return _verified(g, d, "rvor", (1, 2))
    dominating = [
        v for v in sorted(non_isolated) if non_isolated - {v} <= s.neighbors(v)
    ]
    if not dominating:
        raise RuntimeError("threshold graph without a dominating vertex")
    p1 = dominating[0]
    p2 = 1 if p1 != 1 else 2
    return _verified(g, d, "rvor", (p1, p2))


def split_potential(s: StaticGraph, independent: frozenset[int], v: int, w: int) -> int:
    """|N_I(v)| + |N_I(w)| - |N_I(v) & N_I(w)| for clique vertices v, w.

    Strictly increases along every strictly improving best-response move of
    the classic game when both players sit in the clique of a shrinking split
    graph, which bounds the length of any improving sequence.
    """
    ni_v = s.neighbors(v) & independent
    ni_w = s.neighbors(w) & independent
    return len(ni_v) + len(ni_w) - len(ni_v & ni_w)


def split_clique_partition(s: StaticGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Split partition with every fully-clique-adjacent vertex moved into the clique.

    Moving such a vertex keeps the clique a clique; after one move no other
    independent vertex can dominate the enlarged clique (independent vertices
    are pairwise non-adjacent), so the loop settles immediately.
    """
    part = split_partition(s)
    if part is None:
        raise ValueError("underlying graph is not a split graph")
    clique, indep = set(part[0]), set(part[1])
    while True:
        movable = sorted(v for v in indep if clique <= s.neighbors(v))
        if not movable:
            return frozenset(clique), frozenset(indep)
        clique.add(movable[0])
        indep.remove(movable[0])


def vor_split_shrink_ne(g: TemporalGraph) -> Profile:
    """Equilibrium for the classic game on a shrinking split graph.

    Runs best-response dynamics restricted to the clique, starting from the
    two smallest clique vertices. Each improving move raises the potential of
    :func:`split_potential`, so the dynamics terminate; deviations into the
    independent set pay exactly 1 and never beat a clique position.
    """
    s = underlying(g)
    _, shrinking = is_monotone(g)
    if not shrinking:
        raise ValueError("graph is not monotonically shrinking")
    clique, _ = split_clique_partition(s)
    if len(clique) < 2:
        raise ValueError("split graph has no two clique vertices to place players on")
    d = all_pairs(g)
    ordered = sorted(clique)
    start = (ordered[0], ordered[1])
    result = best_response_dynamics(
        g, d, "vor", start, max_steps=8 * (g.n + 2) ** 2, allowed=frozenset(clique)
    )
    if result.status != "nash":
        raise RuntimeError(f"clique-restricted dynamics did not settle: {result.status}")
    return _verified(g, d, "vor", result.profile)


def _extended_layers(g: TemporalGraph, until: int) -> list[tuple]:
    """Stored layers padded with copies of the last layer up to time ``until``."""
    layers = list(g.layers)
    while len(layers) < until:
        layers.append(layers[-1])
    return layers


def _check_preserved(g: TemporalGraph, completed: TemporalGraph, d: DistanceMatrix) -> None:
    d_new = all_pairs(completed)
    for u in g.vertices:
        for v in g.vertices:
            if d_new.td(u, v) != d.td(u, v):
                raise RuntimeError(
                    f"completion changed td({u},{v}): {d.td(u, v)} -> {d_new.td(u, v)}"
                )


def clique_completion(g: TemporalGraph, kind: str | None = None) -> TemporalGraph:
    """Append a complete layer after all distances have settled.

    With d the largest finite temporal distance of g, every pair already
    meets by time d, so a layer added at max(d, tau) + 1 cannot create a
    faster walk between original vertices: the underlying graph becomes a
    clique, monotone growth is preserved, and the distance matrix is
    unchanged (re-checked before returning). Requires temporal connectivity.
    The construction is game-independent; ``kind`` is accepted so call sites
    can pass the game they are studying, and is ignored.
    """
    d = all_pairs(g)
    if not d.all_finite():
        raise ValueError("graph is not temporally connected")
    cut = max(d.max_finite(), g.tau)
    layers = _extended_layers(g, cut)
    layers.append(tuple(combinations(range(1, g.n + 1), 2)))
    completed = TemporalGraph(g.n, tuple(layers))
    _check_preserved(g, completed, d)
    return completed


def kpartite_completion(g: TemporalGraph, k: int) -> TemporalGraph:
    """Complete k-partite extension of the bundled growing 2x3 grid.

    Adds the two missing cross edges of the grid's bipartition plus k - 2 new
    universal vertices, all in a single layer placed after the saturation
    time, so distances among the six original vertices are untouched and the
    reverse game still has no equilibrium (both facts re-checked). Only the
    ``grow_grid_6`` instance is supported; the added edges are specific to
    its bipartition.
    """
    base = build_instance("grow_grid_6").graph
    if g != base:
        raise ValueError("only the bundled grow_grid_6 instance can be completed")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    d = all_pairs(g)
    cut = max(d.max_finite(), g.tau)
    n_new = 4 + k
    layers = _extended_layers(g, cut)
    final = set(layers[-1])
    final.update([(1, 6), (3, 4)])
    for j in range(7, n_new + 1):
        final.update((i, j) for i in range(1, j))
    layers.append(tuple(sorted(final)))
    completed = TemporalGraph(n_new, tuple(layers))
    _check_preserved(g, completed, d)
    d_new = all_pairs(completed)
    if enumerate_nash(completed, d_new, "rvor"):
        raise RuntimeError("k-partite completion unexpectedly gained an equilibrium")
    return completed

"""Recognition of temporal properties and underlying-graph classes.

Every label is verified against its definition before it is reported; a graph
may legitimately carry several labels at once (a clique is also split and
threshold), and consumers are expected to filter. A 1 x m grid is reported as
a path, never as a grid.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import isqrt

from .graph import Edge, StaticGraph, TemporalGraph, is_monotone, underlying
from .reach import DistanceMatrix, all_pairs


def is_connected(s: StaticGraph) -> bool:
    if s.n <= 1:
        return True
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in s.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == s.n


def is_tree(s: StaticGraph) -> bool:
    return s.n >= 1 and s.m == s.n - 1 and is_connected(s)


def is_path(s: StaticGraph) -> bool:
    return is_tree(s) and all(s.degree(v) <= 2 for v in s.vertices)


def is_cycle(s: StaticGraph) -> bool:
    return s.n >= 3 and is_connected(s) and all(s.degree(v) == 2 for v in s.vertices)


def is_clique(s: StaticGraph) -> bool:
    return s.m == s.n * (s.n - 1) // 2


def grid_dims(s: StaticGraph) -> tuple[int, int] | None:
    """(a, b) with a <= b if s is an a x b grid with a, b >= 2, else None.

    Anchors a degree-2 vertex as the (0,0) corner, grows coordinates row by
    row (each interior cell is the unique common neighbour of its upper and
    left cells besides the diagonal one), and finally verifies that the
    resulting coordinate map reproduces the edge set exactly.
    """
    n = s.n
    if n < 4:
        return None
    for a in range(2, isqrt(n) + 1):
        if n % a:
            continue
        b = n // a
        if _degree_hist_matches(s, a, b) and _grid_assignment(s, a, b):
            return (a, b)
    return None


def _degree_hist_matches(s: StaticGraph, a: int, b: int) -> bool:
    expected: Counter[int] = Counter({2: 4})
    side = 2 * (a - 2) + 2 * (b - 2)
    if side:
        expected[3] = side
    inner = (a - 2) * (b - 2)
    if inner:
        expected[4] = inner
    return Counter(s.degree(v) for v in s.vertices) == expected


def _grid_assignment(s: StaticGraph, a: int, b: int) -> bool:
    corner = min(v for v in s.vertices if s.degree(v) == 2)
    x, y = sorted(s.neighbors(corner))
    return _fill_grid(s, a, b, corner, x, y) or _fill_grid(s, a, b, corner, y, x)


def _fill_grid(s: StaticGraph, a: int, b: int, corner: int, right: int, down: int) -> bool:
    pos: dict[tuple[int, int], int] = {(0, 0): corner, (0, 1): right, (1, 0): down}
    used = {corner, right, down}

    def place(cell: tuple[int, int], candidates: set[int]) -> bool:
        candidates -= used
        if len(candidates) != 1:
            return False
        v = candidates.pop()
        pos[cell] = v
        used.add(v)
        return True

    if not place((1, 1), set(s.neighbors(right) & s.neighbors(down)) - {corner}):
        return False
    for j in range(2, b):
        if not place((0, j), set(s.neighbors(pos[(0, j - 1)])) - {pos[(0, j - 2)], pos[(1, j - 1)]}):
            return False
        if not place((1, j), set(s.neighbors(pos[(1, j - 1)]) & s.neighbors(pos[(0, j)])) - {pos[(0, j - 1)]}):
            return False
    for i in range(2, a):
        if not place((i, 0), set(s.neighbors(pos[(i - 1, 0)])) - {pos[(i - 2, 0)], pos[(i - 1, 1)]}):
            return False
        for j in range(1, b):
            common = s.neighbors(pos[(i - 1, j)]) & s.neighbors(pos[(i, j - 1)])
            if not place((i, j), set(common) - {pos[(i - 1, j - 1)]}):
                return False
    grid_edges: set[Edge] = set()
    for i in range(a):
        for j in range(b):
            if j + 1 < b:
                e = (pos[(i, j)], pos[(i, j + 1)])
                grid_edges.add((min(e), max(e)))
            if i + 1 < a:
                e = (pos[(i, j)], pos[(i + 1, j)])
                grid_edges.add((min(e), max(e)))
    return grid_edges == set(s.edges)


def kpartite_parts(s: StaticGraph) -> tuple[frozenset[int], ...] | None:
    """The unique partition into parts if s is complete multipartite, else None.

    The complement of a complete k-partite graph is a disjoint union of k
    cliques, so the parts are the complement's connected components; each must
    be independent in s. Parts are ordered by smallest member.
    """
    if s.n == 0:
        return None
    unseen = set(s.vertices)
    parts = []
    while unseen:
        start = min(unseen)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in unseen - comp:
                if not s.has_edge(v, w):
                    comp.add(w)
                    stack.append(w)
        unseen -= comp
        for u in comp:
            for w in comp:
                if u < w and s.has_edge(u, w):
                    return None
        parts.append(frozenset(comp))
    return tuple(sorted(parts, key=min))


def split_partition(s: StaticGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A (clique, independent set) partition if s is split, else None.

    Takes the m highest-degree vertices where m is the largest index with
    d_i >= i - 1 in the sorted degree sequence, then explicitly verifies the
    partition, so a wrong candidate can never leak out.
    """
    if s.n == 0:
        return frozenset(), frozenset()
    order = sorted(s.vertices, key=lambda v: (-s.degree(v), v))
    degs = [s.degree(v) for v in order]
    m = max(i for i in range(1, s.n + 1) if degs[i - 1] >= i - 1)
    clique, indep = order[:m], order[m:]
    for i, u in enumerate(clique):
        for w in clique[i + 1 :]:
            if not s.has_edge(u, w):
                return None
    for i, u in enumerate(indep):
        for w in indep[i + 1 :]:
            if s.has_edge(u, w):
                return None
    return frozenset(clique), frozenset(indep)


def is_threshold(s: StaticGraph) -> bool:
    """Iteratively strip isolated or dominating vertices; threshold iff empty."""
    live = {v: set(s.neighbors(v)) for v in s.vertices}
    remaining = set(s.vertices)
    while remaining:
        isolated = [v for v in remaining if not live[v]]
        if isolated:
            for v in isolated:
                remaining.remove(v)
            continue
        dom = next(
            (v for v in sorted(remaining) if len(live[v]) == len(remaining) - 1), None
        )
        if dom is None:
            return False
        remaining.remove(dom)
        for u in live[dom]:
            live[u].discard(dom)
        live[dom] = set()
    return True


def classify_underlying(s: StaticGraph) -> frozenset[str]:
    """All class labels the graph satisfies, each verified by definition."""
    if s.n == 0:
        return frozenset()
    labels = set()
    if is_path(s):
        labels.add("path")
    if is_cycle(s):
        labels.add("cycle")
    if is_tree(s):
        labels.add("tree")
    dims = grid_dims(s)
    if dims:
        labels.add(f"grid({dims[0]},{dims[1]})")
    if is_clique(s):
        labels.add("clique")
    parts = kpartite_parts(s)
    if parts:
        labels.add(f"complete_k_partite({len(parts)})")
    if split_partition(s) is not None:
        labels.add("split")
    if is_threshold(s):
        labels.add("threshold")
    return frozenset(labels)


def is_temporally_connected(g: TemporalGraph, d: DistanceMatrix) -> bool:
    """True iff every ordered pair has a finite temporal distance."""
    if d.n != g.n:
        raise ValueError("distance matrix does not match graph size")
    return d.all_finite()


@dataclass(frozen=True)
class ClassReport:
    temporally_connected: bool
    monotone_growing: bool
    monotone_shrinking: bool
    underlying_class: tuple[str, ...]

    def to_json_obj(self) -> dict:
        return {
            "temporally_connected": self.temporally_connected,
            "monotone_growing": self.monotone_growing,
            "monotone_shrinking": self.monotone_shrinking,
            "underlying_class": list(self.underlying_class),
        }


def build_class_report(g: TemporalGraph, d: DistanceMatrix | None = None) -> ClassReport:
    if d is None:
        d = all_pairs(g)
    growing, shrinking = is_monotone(g)
    return ClassReport(
        temporally_connected=is_temporally_connected(g, d),
        monotone_growing=growing,
        monotone_shrinking=shrinking,
        underlying_class=tuple(sorted(classify_underlying(underlying(g)))),
    )

"""Temporal graph data model: layered edge sets with repeat-last semantics."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


def _norm_edge(edge: Sequence[int]) -> Edge:
    u, v = edge
    u, v = int(u), int(v)
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class TemporalGraph:
    """Vertices 1..n plus an ordered, finite sequence of edge layers.

    Layer t (1-indexed) is ``layers[t-1]`` for t <= tau; every later step
    repeats the last stored layer, so the graph is defined for all times.
    Construction normalises each edge to (small, large) order and sorts the
    edges of each layer, but it does not reject bad input; use
    :func:`validate` to check the invariants. Instances are immutable and
    hashable.
    """

    n: int
    layers: tuple[tuple[Edge, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", int(self.n))
        norm = tuple(
            tuple(sorted(_norm_edge(e) for e in layer)) for layer in self.layers
        )
        object.__setattr__(self, "layers", norm)
        object.__setattr__(self, "_sets", tuple(frozenset(l) for l in norm))

    @property
    def tau(self) -> int:
        """Number of stored layers (the lifetime of the stored sequence)."""
        return len(self.layers)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def layer(self, t: int) -> tuple[Edge, ...]:
        """Edges active at time step t >= 1; repeats the last layer past tau."""
        if t < 1:
            raise ValueError(f"time step must be >= 1, got {t}")
        if not self.layers:
            raise ValueError("graph has no layers")
        return self.layers[min(t, self.tau) - 1]

    def layer_set(self, t: int) -> frozenset[Edge]:
        if t < 1:
            raise ValueError(f"time step must be >= 1, got {t}")
        if not self.layers:
            raise ValueError("graph has no layers")
        return self._sets[min(t, self.tau) - 1]  # type: ignore[attr-defined]


@dataclass(frozen=True)
class StaticGraph:
    """Simple undirected graph; the time-collapsed view of a temporal graph."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(_norm_edge(e) for e in self.edges))
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            if u != v and u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj.get(v, frozenset())  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge((u, v)) in self.edges


def validate(g: TemporalGraph) -> list[str]:
    """Return all invariant violations of g; the empty list means g is valid.

    Checks: at least one layer, endpoints in 1..n, no self-loops, no duplicate
    edges within a layer. Total function: never raises on bad data.
    """
    problems: list[str] = []
    if g.n < 0:
        problems.append(f"vertex count {g.n} is negative")
    if not g.layers:
        problems.append("layer sequence is empty")
    for t, layer in enumerate(g.layers, start=1):
        prev = None
        for u, v in layer:
            if u == v:
                problems.append(f"layer {t}: self-loop at vertex {u}")
            if not (1 <= u <= g.n and 1 <= v <= g.n):
                problems.append(f"layer {t}: edge ({u},{v}) has endpoint outside 1..{g.n}")
            if (u, v) == prev:
                problems.append(f"layer {t}: duplicate edge ({u},{v})")
            prev = (u, v)
    return problems


def normalize_lifetime(g: TemporalGraph) -> TemporalGraph:
    """Drop trailing layers that repeat their predecessor.

    The result has minimal lifetime while layer(t) is unchanged for every
    t >= 1 (the dropped layers were redundant under repeat-last semantics).
    Idempotent.
    """
    layers = list(g.layers)
    while len(layers) > 1 and layers[-1] == layers[-2]:
        layers.pop()
    return TemporalGraph(g.n, tuple(layers))


def underlying(g: TemporalGraph) -> StaticGraph:
    """The static graph whose edge set is the union of all layers."""
    edges: set[Edge] = set()
    for layer in g.layers:
        edges.update(layer)
    return StaticGraph(g.n, frozenset(edges))


def is_monotone(g: TemporalGraph) -> tuple[bool, bool]:
    """(growing, shrinking): whether layers only gain / only lose edges.

    A single-layer graph is vacuously both. Empty layers count: an all-empty
    graph is monotonically growing and shrinking.
    """
    growing = all(
        g.layer_set(t) <= g.layer_set(t + 1) for t in range(1, g.tau)
    )
    shrinking = all(
        g.layer_set(t + 1) <= g.layer_set(t) for t in range(1, g.tau)
    )
    return growing, shrinking


# --- JSON interchange -------------------------------------------------------
#
# Canonical form: {"n": <int>, "layers": [[[u, v], ...], ...]} with u < v in
# every pair, edges sorted lexicographically within a layer, layers in
# temporal order, compact separators. Serialising a valid graph and parsing
# it back is byte-exact.


def to_json_obj(g: TemporalGraph) -> dict:
    return {"n": g.n, "layers": [[list(e) for e in layer] for layer in g.layers]}


def to_canonical_json(g: TemporalGraph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"))


def _as_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"{what} must be an integer, got {x!r}")
    return x


def graph_from_obj(obj) -> TemporalGraph:
    """Build a TemporalGraph from parsed JSON; raises ValueError on bad shape."""
    if not isinstance(obj, dict):
        raise ValueError("temporal graph JSON must be an object")
    if set(obj) != {"n", "layers"}:
        raise ValueError('temporal graph JSON must have exactly the keys "n" and "layers"')
    n = _as_int(obj["n"], '"n"')
    layers = obj["layers"]
    if not isinstance(layers, list):
        raise ValueError('"layers" must be an array')
    out = []
    for t, layer in enumerate(layers, start=1):
        if not isinstance(layer, list):
            raise ValueError(f"layer {t} must be an array of edges")
        edges = []
        for e in layer:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"layer {t}: each edge must be a 2-element array")
            edges.append((_as_int(e[0], "edge endpoint"), _as_int(e[1], "edge endpoint")))
        out.append(tuple(edges))
    return TemporalGraph(n, tuple(out))


def from_json(text: str) -> TemporalGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)

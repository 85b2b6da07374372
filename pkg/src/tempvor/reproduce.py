"""Reproduction harness: every bundled result as a named, checkable claim.

Each claim re-derives one headline fact from scratch -- equilibrium
existence or absence on a bundled instance, the stated payoff sets and
best-reply rows, the behaviour of the constructive builders on randomized
families, oracle equivalence for reachability, and the one-edge-change cycle
sweep. Randomized claims draw from a fixed default seed so reruns are
deterministic; pass a different seed to re-roll them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .builders import (
    clique_completion,
    kpartite_completion,
    kpartite_shrink_ne,
    split_clique_partition,
    split_potential,
    threshold_shrink_ne,
    tree_ne,
    vor_split_shrink_ne,
)
from .classify import classify_underlying
from .explorer import FamilySpec, sweep
from .games import (
    best_response_dynamics,
    best_response_graph,
    best_responses,
    enumerate_nash,
    is_nash,
    payoff,
)
from .graph import TemporalGraph, is_monotone, underlying
from .instances import build_instance
from .randgen import (
    random_shrinking_kpartite,
    random_shrinking_split,
    random_shrinking_threshold,
    random_temporal_graph,
    random_temporal_tree,
)
from .reach import all_pairs, earliest_arrivals, oracle_arrivals

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    ok: bool
    detail: str


class _Checks:
    def __init__(self) -> None:
        self.failures: list[str] = []

    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.failures.append(msg)

    def result(self, claim: str, detail: str) -> ClaimResult:
        if self.failures:
            return ClaimResult(claim, False, "; ".join(self.failures))
        return ClaimResult(claim, True, detail)


def _fixture(name: str):
    fx = build_instance(name)
    return fx, all_pairs(fx.graph)


def _claim_grow_cycle_7_rvor(seed: int) -> ClaimResult:
    fx, d = _fixture("grow_cycle_7")
    c = _Checks()
    c.expect(enumerate_nash(fx.graph, d, "rvor") == [], "expected no reverse equilibrium")
    rows = [
        ((2, 5), {4, 5, 6, 7}),
        ((3, 4), {4, 5, 6, 7}),
        ((4, 7), {1, 2, 6, 7}),
        ((5, 4), {1, 2, 3, 4}),
    ]
    for profile, must_win in rows:
        got = payoff(fx.graph, d, "rvor", profile).u2_set
        c.expect(
            must_win <= got,
            f"U_2{profile} should contain {sorted(must_win)}, got {sorted(got)}",
        )
    return c.result(
        "grow_cycle_7.rvor.no_equilibrium",
        "no equilibrium among 49 profiles; 4 dominance rows verified",
    )


def _claim_grow_cycle_7_vor(seed: int) -> ClaimResult:
    fx, d = _fixture("grow_cycle_7")
    c = _Checks()
    c.expect(bool(is_nash(fx.graph, d, "vor", (5, 4))), "(5,4) should be an equilibrium")
    result = payoff(fx.graph, d, "vor", (5, 4))
    c.expect(result.u1 == 3 and result.u2 == 3, f"payoffs should be 3/3, got {result.u1}/{result.u2}")
    c.expect((5, 4) in enumerate_nash(fx.graph, d, "vor"), "(5,4) missing from enumeration")
    return c.result(
        "grow_cycle_7.vor.equilibrium_5_4", "(5,4) is an equilibrium with payoffs 3/3"
    )


def _claim_grow_grid_6_rvor(seed: int) -> ClaimResult:
    fx, d = _fixture("grow_grid_6")
    c = _Checks()
    c.expect(enumerate_nash(fx.graph, d, "rvor") == [], "expected no reverse equilibrium")
    r12 = payoff(fx.graph, d, "rvor", (1, 2))
    c.expect(r12.u1_set == {1, 4}, f"U_1(1,2) should be {{1,4}}, got {sorted(r12.u1_set)}")
    c.expect(r12.u2_set == {2, 3, 5, 6}, f"U_2(1,2) should be {{2,3,5,6}}, got {sorted(r12.u2_set)}")
    expectations = [((6, 2), {3, 5, 6}), ((2, 6), {1, 2, 4}), ((5, 6), {1, 2, 4, 5})]
    for profile, want in expectations:
        got = payoff(fx.graph, d, "rvor", profile).u1_set
        c.expect(got == want, f"U_1{profile} should be {sorted(want)}, got {sorted(got)}")
    return c.result(
        "grow_grid_6.rvor.no_equilibrium",
        "no equilibrium among 36 profiles; 5 payoff sets match",
    )


def _claim_grow_grid_6_vor(seed: int) -> ClaimResult:
    fx, d = _fixture("grow_grid_6")
    c = _Checks()
    c.expect(bool(is_nash(fx.graph, d, "vor", (1, 6))), "(1,6) should be an equilibrium")
    return c.result("grow_grid_6.vor.equilibrium_1_6", "(1,6) is an equilibrium")


def _claim_shrink_path_9_rvor(seed: int) -> ClaimResult:
    fx, d = _fixture("shrink_path_9")
    c = _Checks()
    c.expect(enumerate_nash(fx.graph, d, "rvor") == [], "expected no reverse equilibrium")
    c.expect(payoff(fx.graph, d, "rvor", (4, 5)).u1 == 2, "u1(4,5) should be 2")
    c.expect(payoff(fx.graph, d, "rvor", (6, 5)).u1 == 4, "u1(6,5) should be 4")
    return c.result(
        "shrink_path_9.rvor.no_equilibrium",
        "no equilibrium among 81 profiles; u1(4,5)=2, u1(6,5)=4",
    )


def _claim_shrink_cycle_10_rvor(seed: int) -> ClaimResult:
    fx, d = _fixture("shrink_cycle_10")
    c = _Checks()
    c.expect(enumerate_nash(fx.graph, d, "rvor") == [], "expected no reverse equilibrium")
    c.expect(payoff(fx.graph, d, "rvor", (6, 7)).u1 == 4, "u1(6,7) should be 4")
    c.expect(payoff(fx.graph, d, "rvor", (2, 7)).u1 == 5, "u1(2,7) should be 5")
    return c.result(
        "shrink_cycle_10.rvor.no_equilibrium",
        "no equilibrium among 100 profiles; u1(6,7)=4, u1(2,7)=5",
    )


def _claim_shrink_split_8_rvor(seed: int) -> ClaimResult:
    fx, d = _fixture("shrink_split_8")
    c = _Checks()
    c.expect(enumerate_nash(fx.graph, d, "rvor") == [], "expected no reverse equilibrium")
    expectations = [
        ((7, 4), {3, 7, 8}),
        ((4, 7), {1, 2, 4}),
        ((5, 7), {1, 2, 3, 5}),
        ((5, 6), {2, 3, 5}),
    ]
    for profile, want in expectations:
        got = payoff(fx.graph, d, "rvor", profile).u1_set
        c.expect(got == want, f"U_1{profile} should be {sorted(want)}, got {sorted(got)}")
    return c.result(
        "shrink_split_8.rvor.no_equilibrium",
        "no equilibrium among 64 profiles; 4 payoff sets match",
    )


def _potential_trace_ok(g: TemporalGraph, start, c: _Checks) -> None:
    """Clique-restricted dynamics from ``start`` must settle and raise the potential."""
    s = underlying(g)
    clique, indep = split_clique_partition(s)
    d = all_pairs(g)
    result = best_response_dynamics(
        g, d, "vor", start, max_steps=8 * (g.n + 2) ** 2, allowed=frozenset(clique)
    )
    c.expect(result.status == "nash", f"dynamics from {start} ended in {result.status}")
    phi = split_potential(s, indep, *start)
    for step in result.trace:
        nxt = split_potential(s, indep, *step.profile)
        c.expect(
            nxt > phi,
            f"potential did not increase at {step.profile}: {phi} -> {nxt}",
        )
        phi = nxt


def _claim_shrink_split_8_vor(seed: int) -> ClaimResult:
    fx, d = _fixture("shrink_split_8")
    c = _Checks()
    c.expect(bool(is_nash(fx.graph, d, "vor", (4, 5))), "(4,5) should be an equilibrium")
    profile = vor_split_shrink_ne(fx.graph)
    c.expect(bool(is_nash(fx.graph, d, "vor", profile)), f"builder output {profile} not an equilibrium")
    clique, _ = split_clique_partition(underlying(fx.graph))
    for a in sorted(clique):
        for b in sorted(clique):
            if a != b:
                _potential_trace_ok(fx.graph, (a, b), c)
    rng = random.Random(f"{seed}:split")
    for _ in range(200):
        g = random_shrinking_split(rng)
        prof = vor_split_shrink_ne(g)
        c.expect(
            bool(is_nash(g, all_pairs(g), "vor", prof)),
            f"random split instance: {prof} not an equilibrium",
        )
        start = tuple(sorted(split_clique_partition(underlying(g))[0])[:2])
        _potential_trace_ok(g, start, c)
    return c.result(
        "shrink_split_8.vor.clique_dynamics",
        f"(4,5) verified; builder returned {profile}; potential strictly increases on "
        "all clique starts and 200 random shrinking split instances",
    )


_GRID12_BEST_REPLIES = {
    1: ((6,), 10),
    2: ((6,), 5),
    3: ((6, 7), 8),
    4: ((3,), 9),
    5: ((2, 6, 10), 9),
    6: ((8,), 3),
    7: ((2, 6, 10), 6),
    8: ((7,), 9),
    9: ((6,), 10),
    10: ((6,), 5),
    11: ((6, 7), 8),
    12: ((11,), 9),
}


def _contains_cyclic_run(moves: list[int], run: tuple[int, ...]) -> bool:
    if len(moves) < len(run):
        return False
    doubled = moves + moves
    return any(
        tuple(doubled[i : i + len(run)]) == run for i in range(len(moves))
    )


def _claim_vor_grow_grid_12(seed: int) -> ClaimResult:
    fx, d = _fixture("vor_grow_grid_12")
    g = fx.graph
    c = _Checks()
    c.expect(enumerate_nash(g, d, "vor") == [], "expected no classic equilibrium")
    for fixed, (want_set, want_val) in _GRID12_BEST_REPLIES.items():
        got_set, got_val = best_responses(g, d, "vor", 2, fixed)
        c.expect(
            got_set == want_set and got_val == want_val,
            f"replies to {fixed}: expected {want_set}/{want_val}, got {got_set}/{got_val}",
        )
    brg = best_response_graph(g, d, "vor")
    c.expect(
        brg.responses == {v: rs for v, (rs, _) in _GRID12_BEST_REPLIES.items()},
        "best-response graph deviates from the expected arc sets",
    )
    for p1 in g.vertices:
        for p2 in g.vertices:
            result = best_response_dynamics(g, d, "vor", (p1, p2))
            c.expect(result.status == "cycle", f"dynamics from ({p1},{p2}) did not cycle")
            moves = [step.profile[step.mover - 1] for step in result.cycle]
            c.expect(
                _contains_cyclic_run(moves, (6, 8, 7)),
                f"cycle from ({p1},{p2}) misses the 6->8->7 run: {moves}",
            )
    return c.result(
        "vor_grow_grid_12.vor.best_response_cycle",
        "no equilibrium among 144 profiles; all 12 best-reply rows match; dynamics "
        "from every start cycles through 6->8->7",
    )


def _claim_trees(seed: int) -> ClaimResult:
    rng = random.Random(f"{seed}:trees")
    c = _Checks()
    for _ in range(200):
        g = random_temporal_tree(rng)
        profile = tree_ne(g)
        d = all_pairs(g)
        c.expect(bool(is_nash(g, d, "rvor", profile)), f"{profile} not an equilibrium (n={g.n})")
        result = payoff(g, d, "rvor", profile)
        if g.n >= 2:
            c.expect(
                2 * result.u1 >= g.n >= 2 * result.u2,
                f"payoff bound violated on n={g.n}: u1={result.u1}, u2={result.u2}",
            )
    return c.result(
        "trees.rvor.centroid_equilibrium",
        "200 random temporally connected trees: centroid profile is an equilibrium "
        "with u1 >= n/2 >= u2",
    )


def _claim_kpartite_threshold(seed: int) -> ClaimResult:
    rng = random.Random(f"{seed}:kpartite")
    c = _Checks()
    for i in range(200):
        g = random_shrinking_kpartite(rng, k=2 + i % 3)
        profile = kpartite_shrink_ne(g)
        c.expect(
            bool(is_nash(g, all_pairs(g), "rvor", profile)),
            f"k-partite profile {profile} not an equilibrium (n={g.n})",
        )
    rng = random.Random(f"{seed}:threshold")
    for _ in range(200):
        g = random_shrinking_threshold(rng)
        profile = threshold_shrink_ne(g)
        c.expect(
            bool(is_nash(g, all_pairs(g), "rvor", profile)),
            f"threshold profile {profile} not an equilibrium (n={g.n})",
        )
    return c.result(
        "shrinking.rvor.kpartite_threshold_equilibrium",
        "200 random shrinking complete k-partite (k in 2..4) and 200 threshold "
        "instances: builders return verified equilibria",
    )


def _claim_completions(seed: int) -> ClaimResult:
    c = _Checks()
    cycle7 = build_instance("grow_cycle_7").graph
    d1 = all_pairs(cycle7)
    q = clique_completion(cycle7)
    c.expect(is_monotone(q)[0], "clique completion lost monotone growth")
    c.expect("clique" in classify_underlying(underlying(q)), "completion is not a clique")
    dq = all_pairs(q)
    c.expect(
        all(dq.td(u, v) == d1.td(u, v) for u in cycle7.vertices for v in cycle7.vertices),
        "clique completion changed original distances",
    )
    c.expect(enumerate_nash(q, dq, "rvor") == [], "clique completion gained an equilibrium")

    grid6 = build_instance("grow_grid_6").graph
    d2 = all_pairs(grid6)
    for k in (2, 3, 4):
        kp = kpartite_completion(grid6, k)
        c.expect(is_monotone(kp)[0], f"k={k} completion lost monotone growth")
        c.expect(
            f"complete_k_partite({k})" in classify_underlying(underlying(kp)),
            f"k={k} completion is not complete {k}-partite",
        )
        dk = all_pairs(kp)
        c.expect(
            all(dk.td(u, v) == d2.td(u, v) for u in grid6.vertices for v in grid6.vertices),
            f"k={k} completion changed original distances",
        )
        c.expect(enumerate_nash(kp, dk, "rvor") == [], f"k={k} completion gained an equilibrium")
    return c.result(
        "completions.rvor.no_equilibrium",
        "clique completion of the growing 7-cycle and k-partite completions "
        "(k=2,3,4) of the growing grid keep distances and stay equilibrium-free",
    )


def _claim_oracle(seed: int) -> ClaimResult:
    rng = random.Random(f"{seed}:oracle")
    c = _Checks()
    for i in range(1000):
        g = random_temporal_graph(rng)
        for source in g.vertices:
            fast = earliest_arrivals(g, source)
            slow = oracle_arrivals(g, source)
            if fast != slow:
                c.expect(False, f"instance {i}, source {source}: {fast} != {slow}")
                break
        if c.failures:
            break
    return c.result(
        "reachability.oracle_equivalence",
        "layer sweep matches time-expanded search on 1000 random instances, all sources",
    )


def _claim_cycle_one_change(seed: int) -> ClaimResult:
    spec = FamilySpec("cycle", (3, 9), (1, 3), "any", 1)
    outcome = sweep(spec, "rvor")
    c = _Checks()
    c.expect(outcome.total == 35, f"expected 35 instances, generated {outcome.total}")
    c.expect(
        outcome.without_nash == 0,
        f"{outcome.without_nash} instances without an equilibrium",
    )
    return c.result(
        "cycles.one_change.rvor.equilibrium_exists",
        f"all {outcome.total} cycles (n=3..9, lifetime <= 3, at most one edge change) "
        "have a reverse equilibrium",
    )


CLAIMS: tuple[tuple[str, Callable[[int], ClaimResult]], ...] = (
    ("grow_cycle_7.rvor.no_equilibrium", _claim_grow_cycle_7_rvor),
    ("grow_cycle_7.vor.equilibrium_5_4", _claim_grow_cycle_7_vor),
    ("grow_grid_6.rvor.no_equilibrium", _claim_grow_grid_6_rvor),
    ("grow_grid_6.vor.equilibrium_1_6", _claim_grow_grid_6_vor),
    ("shrink_path_9.rvor.no_equilibrium", _claim_shrink_path_9_rvor),
    ("shrink_cycle_10.rvor.no_equilibrium", _claim_shrink_cycle_10_rvor),
    ("shrink_split_8.rvor.no_equilibrium", _claim_shrink_split_8_rvor),
    ("shrink_split_8.vor.clique_dynamics", _claim_shrink_split_8_vor),
    ("vor_grow_grid_12.vor.best_response_cycle", _claim_vor_grow_grid_12),
    ("trees.rvor.centroid_equilibrium", _claim_trees),
    ("shrinking.rvor.kpartite_threshold_equilibrium", _claim_kpartite_threshold),
    ("completions.rvor.no_equilibrium", _claim_completions),
    ("reachability.oracle_equivalence", _claim_oracle),
    ("cycles.one_change.rvor.equilibrium_exists", _claim_cycle_one_change),
)

CLAIM_IDS: tuple[str, ...] = tuple(claim_id for claim_id, _ in CLAIMS)


def run_claim(claim_id: str, seed: int = DEFAULT_SEED) -> ClaimResult:
    for cid, fn in CLAIMS:
        if cid == claim_id:
            try:
                return fn(seed)
            except Exception as exc:  # builder/internal errors count as failures
                return ClaimResult(cid, False, f"raised {type(exc).__name__}: {exc}")
    raise ValueError(f"unknown claim {claim_id!r}")


def run_claims(target: str = "all", seed: int = DEFAULT_SEED) -> list[ClaimResult]:
    """Run the claims selected by ``target``: "all", a claim id, or a prefix.

    A bundled instance name like ``grow_cycle_7`` selects every claim about
    that instance.
    """
    if target == "all":
        selected = list(CLAIM_IDS)
    elif target in CLAIM_IDS:
        selected = [target]
    else:
        selected = [cid for cid in CLAIM_IDS if cid.startswith(target + ".")]
        if not selected:
            raise ValueError(f"no claims match {target!r}")
    return [run_claim(cid, seed) for cid in selected]

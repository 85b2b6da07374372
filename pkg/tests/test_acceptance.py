"""Acceptance suite: the headline results, one criterion per test.

Every criterion is an exact (tolerance-zero) check on desk-scale instances;
each test prints one PASS/FAIL line and delegates the detailed assertions to
the reproduction harness, so `tempvor reproduce` and this module can never
disagree. Criteria 1..9 are instance facts, 10..12 randomized constructive
suites, 13 the reachability oracle equivalence, and 14 the exhaustive
one-edge-change cycle sweep.
"""

from __future__ import annotations

from tempvor import all_pairs, build_instance, enumerate_nash, payoff
from tempvor.reproduce import run_claim


def _check(claim_id: str) -> None:
    result = run_claim(claim_id)
    print(f"{'PASS' if result.ok else 'FAIL'} {result.claim}: {result.detail}")
    assert result.ok, result.detail


def test_criterion_01_reverse_game_growing_cycle_has_no_equilibrium():
    g = build_instance("grow_cycle_7").graph
    assert enumerate_nash(g, all_pairs(g), "rvor") == []
    _check("grow_cycle_7.rvor.no_equilibrium")


def test_criterion_02_classic_game_growing_cycle_has_5_4():
    g = build_instance("grow_cycle_7").graph
    r = payoff(g, all_pairs(g), "vor", (5, 4))
    assert (r.u1, r.u2) == (3, 3)
    _check("grow_cycle_7.vor.equilibrium_5_4")


def test_criterion_03_reverse_game_growing_grid_has_no_equilibrium():
    g = build_instance("grow_grid_6").graph
    assert enumerate_nash(g, all_pairs(g), "rvor") == []
    _check("grow_grid_6.rvor.no_equilibrium")


def test_criterion_04_classic_game_growing_grid_has_1_6():
    _check("grow_grid_6.vor.equilibrium_1_6")


def test_criterion_05_reverse_game_shrinking_path_has_no_equilibrium():
    g = build_instance("shrink_path_9").graph
    assert enumerate_nash(g, all_pairs(g), "rvor") == []
    _check("shrink_path_9.rvor.no_equilibrium")


def test_criterion_06_reverse_game_shrinking_cycle_has_no_equilibrium():
    g = build_instance("shrink_cycle_10").graph
    assert enumerate_nash(g, all_pairs(g), "rvor") == []
    _check("shrink_cycle_10.rvor.no_equilibrium")


def test_criterion_07_reverse_game_shrinking_split_has_no_equilibrium():
    g = build_instance("shrink_split_8").graph
    assert enumerate_nash(g, all_pairs(g), "rvor") == []
    _check("shrink_split_8.rvor.no_equilibrium")


def test_criterion_08_classic_game_shrinking_split_dynamics():
    _check("shrink_split_8.vor.clique_dynamics")


def test_criterion_09_classic_game_3x4_grid_best_response_cycle():
    g = build_instance("vor_grow_grid_12").graph
    assert enumerate_nash(g, all_pairs(g), "vor") == []
    _check("vor_grow_grid_12.vor.best_response_cycle")


def test_criterion_10_centroid_equilibria_on_random_trees():
    _check("trees.rvor.centroid_equilibrium")


def test_criterion_11_builders_on_random_kpartite_and_threshold():
    _check("shrinking.rvor.kpartite_threshold_equilibrium")


def test_criterion_12_completions_preserve_distances_and_verdicts():
    _check("completions.rvor.no_equilibrium")


def test_criterion_13_reachability_oracle_equivalence():
    _check("reachability.oracle_equivalence")


def test_criterion_14_one_edge_change_cycles_always_have_equilibria():
    _check("cycles.one_change.rvor.equilibrium_exists")

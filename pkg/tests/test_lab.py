import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from respart.errors import InvalidRange, OutOfRange, TooLarge
from respart.graph import is_generalized_tree, is_tree, star_graph
from respart.lab import (
    BuildSequence,
    _sweep_tree_shard,
    BuildStep,
    SweepResult,
    Violation,
    all_trees,
    build_generalized_tree,
    random_generalized_tree,
    random_tree,
    sweep,
    sweep_gentrees,
    sweep_random_tree_constructions,
    sweep_trees,
    tree_canonical_form,
    tree_from_prufer,
    tree_to_prufer,
)


def test_prufer_examples():
    assert tree_from_prufer([]).edges == ((0, 1),)
    assert tree_from_prufer([0, 0, 0]) == star_graph(4)
    assert set(tree_from_prufer([1, 2]).edges) == {(0, 1), (1, 2), (2, 3)}
    with pytest.raises(OutOfRange):
        tree_from_prufer([5])


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))
def test_prufer_round_trip(seq):
    tree = tree_from_prufer(seq)
    assert tree_to_prufer(tree) == seq
    assert tree_from_prufer(tree_to_prufer(tree)).edges == tree.edges


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_all_trees_counts(n, count):
    trees = list(all_trees(n))
    assert len(trees) == count
    assert all(is_tree(t) for t in trees)
    assert len({t.edges for t in trees}) == count


def test_all_trees_limits():
    with pytest.raises(TooLarge):
        next(all_trees(10))
    with pytest.raises(TooLarge):
        next(all_trees(1))


def test_random_tree_deterministic():
    assert random_tree(6, 42).edges == random_tree(6, 42).edges
    assert is_tree(random_tree(30, 1))
    with pytest.raises(InvalidRange):
        random_tree(1, 0)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(3)
    for seed in range(20):
        tree = random_tree(10, seed)
        perm = list(range(10))
        rng.shuffle(perm)
        assert tree_canonical_form(tree) == tree_canonical_form(tree.relabel(perm))
    # unlabeled tree counts
    assert len({tree_canonical_form(t) for t in all_trees(6)}) == 6
    assert len({tree_canonical_form(t) for t in all_trees(8)}) == 23


def test_build_sequence():
    seq = BuildSequence((BuildStep(3), BuildStep(3, 2), BuildStep(2, 0)))
    graph = build_generalized_tree(seq)
    assert graph.n == 6 and graph.m == 7
    assert is_generalized_tree(graph)
    assert seq.encode() == "K3 K3@2 K2@0"


@pytest.mark.parametrize(
    "steps",
    [
        (BuildStep(3),),
        (BuildStep(1), BuildStep(3, 0)),
        (BuildStep(3), BuildStep(3, 3)),
        (BuildStep(3, 0), BuildStep(3, 1)),
        (BuildStep(3), BuildStep(3)),
    ],
)
def test_build_sequence_rejects(steps):
    with pytest.raises(InvalidRange):
        BuildSequence(steps).validate()


def test_random_generalized_tree():
    for seed in range(60):
        graph, seq = random_generalized_tree(6, (2, 5), seed, max_vertices=12)
        assert is_generalized_tree(graph) and graph.n <= 12
        assert 2 <= len(seq.steps) <= 6
        assert build_generalized_tree(seq) == graph
    assert random_generalized_tree(4, seed=7) == random_generalized_tree(4, seed=7)
    with pytest.raises(InvalidRange):
        random_generalized_tree(1)
    with pytest.raises(InvalidRange):
        random_generalized_tree(3, (1, 4))


def test_sweep_result():
    r = SweepResult(3)
    assert r.passed
    r.merge(SweepResult(2, [Violation("x", "thm1", "pd <= 3", {})]))
    assert r.tested == 5 and not r.passed


def test_small_tree_sweep_clean():
    r = sweep_trees(2, 6)
    assert r.tested == sum(n ** (n - 2) for n in range(2, 7))
    assert r.passed, r.violations[:3]


def test_sweep_catches_corrupted_bound():
    r = sweep_trees(4, 5, offsets={"thm1": -1})
    assert not r.passed
    assert {v.bound for v in r.violations} == {"thm1"}


def test_eq2_only_shard_catches_corruption():
    r = _sweep_tree_shard(9, 0, 40, 8, 9, False, {"eq2": 1})
    assert r.tested == 40
    assert any(v.bound == "eq2" for v in r.violations)
    assert _sweep_tree_shard(9, 0, 40, 8, 9, False, None).passed


def test_gentree_sweep_and_self_test():
    assert sweep_gentrees(4).passed
    r = sweep_gentrees(3, exact=False, offsets={"gentree": -1})
    assert len(r.violations) == 3 and r.tested == 3


def test_random_tree_construction_sweep():
    r = sweep_random_tree_constructions(40, 14)
    assert r.tested == 40 and r.passed


def test_sweep_dispatch():
    assert sweep("random-trees", count=5).tested == 5
    assert sweep("trees", n_min=3, n_max=4).tested == 19
    with pytest.raises(InvalidRange):
        sweep("cycles")


def test_parallel_sweep_matches_serial():
    serial = sweep_trees(2, 6, shard_size=200)
    parallel = sweep_trees(2, 6, shard_size=200, workers=2)
    assert serial.tested == parallel.tested and serial.violations == parallel.violations

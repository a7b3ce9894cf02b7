import pytest

from respart.anatomy import gen_tree_anatomy, support_profile, tree_anatomy
from respart.errors import IsAPath, NotATree, NotGeneralizedTree
from respart.graph import complete_graph, cycle_graph, is_path_graph, path_graph, star_graph
from respart.lab import all_trees, random_tree
from respart.resolver import metric_dimension_exact

from .conftest import K4_K4, TRIANGLE_OF_TRIANGLES, g


def test_spider222(spider222):
    a = tree_anatomy(spider222)
    assert a.majors == (0,)
    assert (a.n1, a.ex, a.kappa, a.tau) == (3, 1, 1, 3)
    assert a.supports == (1, 3, 5) and (a.xi, a.theta) == (3, 1)
    (rec,) = a.exterior_majors
    assert rec.legs == ((1, 2), (3, 4), (5, 6))


def test_dstar(dstar):
    a = tree_anatomy(dstar)
    assert (a.kappa, a.tau, a.xi, a.theta, a.n1, a.ex) == (2, 2, 2, 2, 4, 2)
    assert a.terminal_of == {2: 0, 3: 0, 4: 1, 5: 1}


def test_cat32(cat32):
    a = tree_anatomy(cat32)
    assert (a.kappa, a.tau, a.n1, a.ex) == (3, 2, 6, 3)


def test_terminal_order_longest_leg_first():
    # legs of lengths 1, 3, 2 at center 0
    t = g((7, [(0, 1), (0, 2), (2, 3), (3, 4), (0, 5), (5, 6)]))
    (rec,) = tree_anatomy(t).exterior_majors
    assert rec.terminals == (4, 6, 1)
    assert rec.legs == ((2, 3, 4), (5, 6), (1,))


def test_tree_anatomy_errors():
    with pytest.raises(IsAPath):
        tree_anatomy(path_graph(5))
    with pytest.raises(NotATree):
        tree_anatomy(cycle_graph(5))


def test_support_profile_paths():
    for n in range(4, 10):
        p = support_profile(path_graph(n))
        assert (p.xi, p.theta) == (2, 1)
    assert support_profile(path_graph(3)).supports == (1,)
    assert support_profile(path_graph(2)).theta == 1


def _legs_ok(t, a):
    for rec in a.exterior_majors:
        seen = set()
        for leaf, leg in zip(rec.terminals, rec.legs):
            assert leg[0] in t.adj[rec.major] and leg[-1] == leaf
            assert all(t.has_edge(x, y) for x, y in zip(leg, leg[1:]))
            assert not seen & set(leg)
            seen |= set(leg)


@pytest.mark.parametrize("n", range(4, 8))
def test_tree_invariants_exhaustive(n):
    for t in all_trees(n):
        if is_path_graph(t):
            continue
        a = tree_anatomy(t)
        assert set(a.terminal_of) == set(a.leaves)
        assert a.kappa >= 1 and a.tau >= 2
        assert a.kappa + a.tau <= a.xi + a.theta
        _legs_ok(t, a)


@pytest.mark.parametrize("seed", range(40))
def test_leg_invariants_random(seed):
    t = random_tree(16, seed)
    if not is_path_graph(t):
        _legs_ok(t, tree_anatomy(t))


@pytest.mark.parametrize("n", range(4, 8))
def test_dim_formula_matches_oracle(n):
    for t in all_trees(n):
        if is_path_graph(t):
            continue
        a = tree_anatomy(t)
        assert metric_dimension_exact(t)[0] == a.n1 - a.ex, t


def test_gentree_path():
    ga = gen_tree_anatomy(path_graph(5))
    assert [s.vertex for s in ga.support_cut_vertices] == [1, 3]
    assert (ga.zeta, ga.vartheta, ga.phi) == (2, 0, 1)


def test_gentree_triangle_of_triangles():
    ga = gen_tree_anatomy(g(TRIANGLE_OF_TRIANGLES))
    assert [s.vertex for s in ga.support_cut_vertices] == [0, 1, 2]
    assert [s.exterior_extremes for s in ga.support_cut_vertices] == [(3, 4), (5, 6), (7, 8)]
    assert (ga.zeta, ga.vartheta, ga.phi) == (3, 0, 2)


def test_gentree_two_k4():
    ga = gen_tree_anatomy(g(K4_K4))
    assert len(ga.support_cut_vertices) == 1
    assert ga.support_cut_vertices[0].exterior_extremes == (0, 1, 2, 4, 5, 6)
    assert (ga.zeta, ga.vartheta, ga.phi) == (1, 0, 6)


def test_gentree_q_block():
    # triangle 0,1,2 whose corners 0 and 1 carry pendant edges; 2 stays extreme
    # -> block {0,1,2} has 2 cut vertices and only 1 extreme: not a Q block.
    # K4 0,1,2,3 with pendants on 0 and 1: 2 cut, 2 extreme -> Q block.
    gr = g((6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 5)]))
    ga = gen_tree_anatomy(gr)
    assert [q.block for q in ga.q_blocks] == [(0, 1, 2, 3)]
    assert ga.q_blocks[0].extremes == (2, 3)
    assert (ga.zeta, ga.vartheta, ga.phi) == (2, 1, 2)


def test_gentree_errors():
    with pytest.raises(NotGeneralizedTree):
        gen_tree_anatomy(cycle_graph(5))
    with pytest.raises(NotGeneralizedTree):
        gen_tree_anatomy(complete_graph(4))


@pytest.mark.parametrize("n", range(3, 8))
def test_tree_as_gentree(n):
    for t in all_trees(n):
        ga = gen_tree_anatomy(t)
        p = support_profile(t)
        assert (ga.zeta, ga.phi, ga.vartheta) == (p.xi, p.theta, 0)


def test_star_anatomy():
    a = tree_anatomy(star_graph(5))
    assert (a.n1, a.ex, a.kappa, a.tau, a.xi, a.theta) == (5, 1, 1, 5, 1, 5)

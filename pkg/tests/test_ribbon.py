import random

import pytest

from rootpoly.corpus import (fig_k23_rooted, fig_plane_dual, fig_torus, layered,
                             semi_balanced_corpus, tour_example)
from rootpoly.digraph import DirectedGraph, GraphError, enumerate_spanning_trees
from rootpoly.ribbon import (Basis, RibbonError, RibbonStructure, compare_prec,
                             enumerate_jaeger_trees, is_jaeger, jaeger_basis_slide,
                             jaeger_trees_brute_force, semi_passive_arcs,
                             semi_passive_arcs_by_order, t_order, tour)


def test_ribbon_validation():
    g = DirectedGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(RibbonError):
        RibbonStructure(g, [[0], [0], [1]])
    with pytest.raises(RibbonError):
        RibbonStructure(g, [[0], [0, 1, 1], [1]])
    r = RibbonStructure(g, [[0], [1, 0], [1]])
    assert r == RibbonStructure(g, [[0], [0, 1], [1]])   # same cyclic order
    assert r.succ(1, 1) == 0 and r.pred(1, 0) == 1


def test_drawn_tour_is_exact():
    ex = tour_example()
    tr = tour(ex.graph, ex.ribbon, ex.basis, {0, 2, 4})
    assert tr.steps == ((0, 0), (1, 1), (1, 4), (3, 2), (2, 1), (2, 2),
                        (3, 3), (3, 4), (1, 0), (0, 3))
    assert is_jaeger(ex.graph, ex.ribbon, ex.basis, {0, 2, 4})


def test_tour_visits_every_incidence_once():
    rng = random.Random(1)
    for ex in semi_balanced_corpus():
        g = ex.graph
        ribbon = RibbonStructure.random(g, rng)
        trees = enumerate_spanning_trees(g)
        for t in rng.sample(trees, min(10, len(trees))):
            tr = tour(g, ribbon, ex.basis, t)
            assert len(tr) == 2 * g.m
            assert sorted(tr.steps) == sorted((v, e) for e in range(g.m) for v in g.arcs[e])
            assert sorted(t_order(g, ribbon, ex.basis, t).values()) == list(range(g.m))


def test_tour_rejects_bad_input():
    ex = tour_example()
    with pytest.raises(GraphError):
        tour(ex.graph, ex.ribbon, ex.basis, {0, 1})
    with pytest.raises(RibbonError):
        tour(ex.graph, ex.ribbon, Basis(0, 1), {0, 2, 4})


def test_shelling_example_order_and_semi_passivity():
    ex = fig_k23_rooted()
    g, rb, b = ex.graph, ex.ribbon, ex.basis
    trees = enumerate_jaeger_trees(g, rb, b)
    named = [sorted(ex.labels[e] for e in t) for t in trees]
    assert named == [sorted(["pa", "aq", "bq", "cq"]), sorted(["pa", "pb", "aq", "cq"]),
                     sorted(["pa", "pc", "aq", "bq"]), sorted(["pa", "pb", "pc", "aq"])]
    assert [len(semi_passive_arcs(g, rb, b, t)) for t in trees] == [0, 1, 1, 2]
    assert [len(semi_passive_arcs_by_order(g, rb, b, t)) for t in trees] == [0, 1, 1, 2]


def test_search_matches_brute_force_on_random_ribbons():
    rng = random.Random(7)
    for ex in semi_balanced_corpus():
        g = ex.graph
        if g.m > 12:
            continue
        for _ in range(3):
            rb = RibbonStructure.random(g, rng)
            e = rng.randrange(g.m)
            b = Basis(rng.choice(g.arcs[e]), e)
            fast = enumerate_jaeger_trees(g, rb, b)
            assert fast == jaeger_trees_brute_force(g, rb, b)
            for t in fast:
                assert semi_passive_arcs(g, rb, b, t) == semi_passive_arcs_by_order(g, rb, b, t)


def test_tree_order_is_total_and_antisymmetric():
    ex = fig_plane_dual()
    g, rb, b = ex.graph, ex.ribbon, ex.basis
    trees = enumerate_spanning_trees(g)[:30]
    for t1 in trees:
        for t2 in trees:
            c = compare_prec(g, rb, b, t1, t2)
            assert c == -compare_prec(g, rb, b, t2, t1)
            assert (c == 0) == (t1 == t2)


def test_parallel_enumeration_is_identical():
    ex = layered((2, 3))
    seq = enumerate_jaeger_trees(ex.graph, ex.ribbon, ex.basis)
    par = enumerate_jaeger_trees(ex.graph, ex.ribbon, ex.basis, threads=3, split_depth=3)
    assert seq == par


def test_basis_slide_keeps_jaeger_trees():
    rng = random.Random(3)
    for ex in semi_balanced_corpus()[:8]:
        g = ex.graph
        rb = RibbonStructure.random(g, rng)
        for e in range(g.m):
            b = Basis(g.head(e), e)
            assert (enumerate_jaeger_trees(g, rb, b)
                    == enumerate_jaeger_trees(g, rb, jaeger_basis_slide(g, rb, b)))
    with pytest.raises(RibbonError):
        jaeger_basis_slide(g, rb, Basis(g.tail(0), 0))


def test_reversed_ribbon_on_reversed_graph_keeps_count():
    rng = random.Random(11)
    for ex in semi_balanced_corpus()[:8]:
        g = ex.graph
        rb = RibbonStructure.random(g, rng)
        n1 = len(enumerate_jaeger_trees(g, rb, ex.basis))
        rg = g.reverse()
        n2 = len(enumerate_jaeger_trees(rg, rb.reversed().on(rg), ex.basis))
        assert n1 == n2


def test_torus_complements():
    ex = fig_torus()
    g = ex.graph
    comps = [sorted(ex.labels[e] for e in set(range(g.m)) - t)
             for t in enumerate_jaeger_trees(g, ex.ribbon, ex.basis)]
    assert sorted(comps) == [["alpha", "beta"], ["alpha", "gamma"],
                             ["delta", "epsilon"], ["delta", "zeta"]]


def test_semi_passive_rejects_non_jaeger():
    ex = fig_k23_rooted()
    g, rb, b = ex.graph, ex.ribbon, ex.basis
    bad = next(t for t in enumerate_spanning_trees(g) if not is_jaeger(g, rb, b, t))
    with pytest.raises(RibbonError):
        semi_passive_arcs(g, rb, b, bad)


def test_rotation_must_cover_all_vertices():
    g = DirectedGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(RibbonError):
        RibbonStructure(g, [[0], [0, 1]])

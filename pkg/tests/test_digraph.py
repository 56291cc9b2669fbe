import itertools
import random

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from rootpoly.corpus import layered, semi_balanced_corpus
from rootpoly.digraph import (DirectedGraph, GraphError, cycle_from_vertices,
                              enumerate_cycles, enumerate_spanning_trees, fundamental_cut,
                              fundamental_cycle, reverse_directed_cut,
                              semi_balanced_layering, tree_path)


def random_graph(rng, n, p=0.5):
    arcs = []
    for a, b in itertools.combinations(range(n), 2):
        if rng.random() < p:
            arcs.append((a, b) if rng.random() < 0.5 else (b, a))
    return DirectedGraph(n, arcs)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    flip = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DirectedGraph(n, [(b, a) if f else (a, b)
                             for (a, b), k, f in zip(pairs, keep, flip) if k])


def kirchhoff(g):
    L = sympy.zeros(g.n, g.n)
    for t, h in g.arcs:
        L[t, t] += 1
        L[h, h] += 1
        L[t, h] -= 1
        L[h, t] -= 1
    return int(L[1:, 1:].det()) if g.n > 1 else 1


def test_rejects_loops_and_parallel_arcs():
    with pytest.raises(GraphError):
        DirectedGraph(2, [(0, 0)])
    with pytest.raises(GraphError):
        DirectedGraph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        DirectedGraph(2, [(0, 2)])
    assert DirectedGraph(2, [(0, 1), (1, 0)], multi=True).m == 2


def test_layering_examples():
    k34 = DirectedGraph(7, [(u, w) for u in range(3) for w in range(3, 7)])
    assert semi_balanced_layering(k34) == (0, 0, 0, 1, 1, 1, 1)
    assert semi_balanced_layering(DirectedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) is None
    lc = layered((1, 2, 1))
    pot = semi_balanced_layering(lc.graph)
    assert sorted(pot) == [0, 0, 1, 1, 1, 2, 2]


def test_layering_normalised_per_component():
    g = DirectedGraph(5, [(0, 1), (2, 3), (3, 4)])
    assert semi_balanced_layering(g) == (0, 1, 0, 1, 2)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_layering_iff_all_cycles_balanced(g):
    layer = semi_balanced_layering(g)
    balanced = all(c.is_balanced() for c in enumerate_cycles(g))
    assert (layer is not None) == balanced
    if layer is not None:
        assert all(layer[h] - layer[t] == 1 for t, h in g.arcs)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_reverse_is_involution_and_keeps_layering(g):
    assert g.reverse().reverse() == g
    a, b = semi_balanced_layering(g), semi_balanced_layering(g.reverse())
    assert (a is None) == (b is None)
    if a is not None:
        for comp in g.components():
            top = max(a[v] for v in comp)
            assert all(b[v] == top - a[v] for v in comp)


def test_reversing_directed_cuts_keeps_semi_balance():
    rng = random.Random(5)
    g = DirectedGraph(7, [(u, w) for u in range(3) for w in range(3, 7)])
    done = 0
    while done < 30:
        side = {v for v in range(g.n) if rng.random() < 0.5}
        try:
            g2 = reverse_directed_cut(g, side)
        except GraphError:
            continue
        assert semi_balanced_layering(g2) is not None
        g, done = g2, done + 1
    with pytest.raises(GraphError):
        reverse_directed_cut(DirectedGraph(3, [(0, 1), (2, 0)]), {0})


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_spanning_trees_match_matrix_tree_count(g):
    if not g.is_connected():
        with pytest.raises(GraphError):
            enumerate_spanning_trees(g)
        return
    trees = enumerate_spanning_trees(g)
    assert len(trees) == len(set(trees)) == kirchhoff(g)
    for t in trees:
        assert len(t) == g.n - 1 and g.is_connected(t)


def test_spanning_tree_counts():
    assert len(enumerate_spanning_trees(DirectedGraph(3, [(0, 1), (1, 2)]))) == 1
    assert len(enumerate_spanning_trees(layered((2, 1)).graph)) == 12
    assert len(enumerate_spanning_trees(DirectedGraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)]))) == 4


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_cycles_match_networkx(g):
    ours = {frozenset(c.arcs) for c in enumerate_cycles(g)}
    U = nx.MultiGraph()
    U.add_nodes_from(range(g.n))
    for e, (t, h) in enumerate(g.arcs):
        U.add_edge(t, h, key=e)
    theirs = set()
    for cyc in nx.simple_cycles(U.to_undirected()):
        if len(cyc) < 3:
            continue
        arcs = set()
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            arcs.add(next(e for e, (t, h) in enumerate(g.arcs) if {t, h} == {a, b}))
        theirs.add(frozenset(arcs))
    assert ours == theirs
    for c in enumerate_cycles(g):
        assert c.plus | c.minus == set(c.arcs) and not c.plus & c.minus
        assert c.reference in c.plus


def test_fundamental_cut_examples():
    path = DirectedGraph(3, [(0, 1), (1, 2)])
    assert fundamental_cut(path, {0, 1}, 0).arcs == {0}
    with pytest.raises(GraphError):
        fundamental_cut(path, {0, 1}, 5)


def test_fundamental_cycle_example():
    # a->b<-c->d<-a with a, b, c, d = 0..3; arcs ab cb cd ad
    g = DirectedGraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    c = fundamental_cycle(g, {0, 1, 2}, 3)
    assert c.reference == 3
    assert c.plus == {3, 1} and c.minus == {0, 2}
    with pytest.raises(GraphError):
        fundamental_cycle(g, {0, 1, 2}, 0)


def test_fundamental_cuts_against_brute_force_split():
    for ex in semi_balanced_corpus()[:6]:
        g = ex.graph
        for t in enumerate_spanning_trees(g)[:40]:
            for e in t:
                cut = fundamental_cut(g, t, e, base=ex.basis.node)
                assert e in cut.arcs
                assert not g.is_connected(set(range(g.m)) - cut.arcs)
                # brute force: the component of the base in T - e
                comp = {ex.basis.node}
                changed = True
                while changed:
                    changed = False
                    for f in t - {e}:
                        a, b = g.arcs[f]
                        if (a in comp) != (b in comp):
                            comp |= {a, b}
                            changed = True
                assert cut.base_side == comp


def test_tree_path_and_cycle_builder():
    g = DirectedGraph(4, [(0, 1), (1, 2), (3, 2)])
    verts, arcs = tree_path(g, {0, 1, 2}, 0, 3)
    assert verts == [0, 1, 2, 3] and arcs == [0, 1, 2]
    with pytest.raises(GraphError):
        cycle_from_vertices(g, [0, 1], [0, 0])


def test_components_and_induced():
    g = DirectedGraph(5, [(0, 1), (2, 3)])
    assert len(g.components()) == 3
    sub, vmap, amap = g.induced([2, 3])
    assert sub.n == 2 and sub.m == 1
    assert g.delete_arcs([0]).arcs == ((2, 3),)

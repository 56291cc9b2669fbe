import random

import pytest

from rootpoly.corpus import (K23_ORIENTATIONS, K34_ORIENTATIONS, fig_k23_rooted, hexagon,
                             layered, path, plane_k23, square)
from rootpoly.digraph import DirectedGraph, GraphError, enumerate_cycles
from rootpoly.invariants import (NotSemiBalanced, disjoint_union, ehrhart_count,
                                 ehrhart_table, fuse, h_star_from_ehrhart,
                                 interior_disconnected, interior_polynomial, is_bridge,
                                 normalized_volume, verify_bridge, verify_disjoint,
                                 verify_product, verify_recursion)
from rootpoly.polynomial import ONE, Polynomial
from rootpoly.ribbon import Basis, RibbonStructure


@pytest.mark.parametrize("sizes,expected", list(K23_ORIENTATIONS.items()))
def test_k23_orientations(sizes, expected):
    assert interior_polynomial(layered(sizes).graph) == expected


@pytest.mark.parametrize("sizes,expected", list(K34_ORIENTATIONS.items()))
def test_k34_orientations(sizes, expected):
    assert interior_polynomial(layered(sizes).graph) == expected


def test_small_cases():
    assert interior_polynomial(DirectedGraph(1, [])) == ONE
    assert interior_polynomial(path().graph) == ONE
    assert interior_polynomial(square().graph) == [1, 1]
    assert interior_polynomial(hexagon().graph) == [1, 1, 1]
    with pytest.raises(NotSemiBalanced):
        interior_polynomial(DirectedGraph(3, [(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(GraphError):
        interior_polynomial(DirectedGraph(3, [(0, 1)]))


def test_does_not_depend_on_ribbon_or_basis():
    rng = random.Random(9)
    g = fig_k23_rooted().graph
    want = interior_polynomial(g)
    for _ in range(10):
        rb = RibbonStructure.random(g, rng)
        e = rng.randrange(g.m)
        assert interior_polynomial(g, rb, Basis(rng.choice(g.arcs[e]), e)) == want


def test_ehrhart_backends_agree():
    for g in [square().graph, plane_k23().graph, layered((1, 1, 0)).graph]:
        assert ehrhart_table(g, 3, "box") == ehrhart_table(g, 3, "sums")
        assert h_star_from_ehrhart(g, "box") == interior_polynomial(g)
    assert ehrhart_count(square().graph, 0) == 1
    with pytest.raises(ValueError):
        ehrhart_count(square().graph, -1)
    with pytest.raises(ValueError):
        ehrhart_count(square().graph, 1, backend="nope")


def test_disconnected_convention():
    two = disjoint_union(square().graph, plane_k23().graph)
    expected = Polynomial([1, -1]) * Polynomial([1, 1]) * interior_polynomial(plane_k23().graph)
    assert interior_disconnected(two) == expected
    assert h_star_from_ehrhart(two, "sums") == expected
    assert interior_disconnected(DirectedGraph(3, [])) == Polynomial([1, -1]) ** 2


def test_fuse_shapes():
    a, b = square().graph, square().graph
    v = fuse(a, b, ("vertex", 0, 1))
    assert (v.n, v.m) == (7, 8)
    e = fuse(a, b, ("edge", 0, 3))
    assert (e.n, e.m) == (6, 7)
    with pytest.raises(GraphError):
        fuse(a, b, ("face", 0, 0))


def test_identities_on_small_graphs():
    assert verify_product(square().graph, plane_k23().graph, ("vertex", 1, 2))[0]
    assert verify_product(square().graph, plane_k23().graph, ("edge", 0, 0))[0]
    p = path().graph
    for e in range(p.m):
        assert is_bridge(p, e)
        assert verify_bridge(p, e)[0]
    with pytest.raises(GraphError):
        verify_bridge(square().graph, 0)
    assert verify_disjoint(square().graph, hexagon().graph)[0]


def test_recursion_sums_to_zero():
    g = plane_k23().graph
    for c in enumerate_cycles(g):
        zero, total = verify_recursion(g, c)
        assert zero and total == 0


def test_normalized_volume_counts_trees():
    assert normalized_volume(layered((1, 2, 1)).graph) == 14

"""Interior polynomials, Ehrhart counts and the product/recursion identities.

The interior polynomial of a connected semi-balanced graph is computed from
any ribbon structure and basis as the distribution of semi-passive arcs over
the Jaeger trees.  Independently it is the h*-polynomial of the root
polytope, which ``h_star_from_ehrhart`` recovers from lattice-point counts.
"""

from itertools import combinations, product

from .digraph import DirectedGraph, GraphError, semi_balanced_layering
from .geometry import contains_point
from .polynomial import ONE, ONE_MINUS_T, Polynomial, h_from_counts
from .ribbon import (RibbonStructure, check_basis, default_basis,
                     enumerate_jaeger_trees, semi_passive_arcs)


class NotSemiBalanced(GraphError):
    pass


def _require_semi_balanced(g):
    if semi_balanced_layering(g) is None:
        raise NotSemiBalanced("graph is not semi-balanced")


def jaeger_statistics(g, ribbon=None, basis=None, threads=1):
    """Jaeger trees in tree order with their numbers of semi-passive arcs."""
    ribbon = ribbon if ribbon is not None else RibbonStructure.canonical(g)
    basis = check_basis(g, basis if basis is not None else default_basis(g))
    trees = enumerate_jaeger_trees(g, ribbon, basis, threads=threads)
    return [(t, len(semi_passive_arcs(g, ribbon, basis, t))) for t in trees]


def interior_polynomial(g, ribbon=None, basis=None, threads=1):
    """Interior polynomial of a connected semi-balanced graph."""
    if not g.is_connected():
        raise GraphError("graph is not connected; use interior_disconnected")
    _require_semi_balanced(g)
    if g.m == 0:
        return ONE
    counts = {}
    for _, r in jaeger_statistics(g, ribbon, basis, threads):
        counts[r] = counts.get(r, 0) + 1
    return Polynomial([counts.get(j, 0) for j in range(max(counts) + 1)])


def interior_disconnected(g, threads=1):
    """``(1-t)^(c-1)`` times the product of the component polynomials."""
    _require_semi_balanced(g)
    comps = g.component_subgraphs()
    out = ONE_MINUS_T ** (len(comps) - 1)
    for sub, _, _ in comps:
        out = out * interior_polynomial(sub, threads=threads)
    return out


# lattice-point counts

def ehrhart_count(g, k, backend="box"):
    """Number of integer points in ``k`` times the root polytope.

    ``backend="box"`` scans a bounding box and tests membership with the
    exact LP; ``backend="sums"`` counts distinct sums of ``k`` vertex
    vectors, which is valid because the polytope has a unimodular dissection.
    """
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    if k == 0:
        return 1
    if g.m == 0:
        return 0
    if backend == "box":
        return _box_count(g, k)
    if backend == "sums":
        return len(_sumsets(g, k)[k])
    raise ValueError(f"unknown backend {backend!r}")


def _box_count(g, k):
    n = g.n
    lo = [-k if g.outdegree(v) else 0 for v in range(n)]
    hi = [k if g.indegree(v) else 0 for v in range(n)]
    layer = semi_balanced_layering(g)
    count = 0
    # the last coordinate is fixed by the zero coordinate sum
    for head in product(*(range(lo[v], hi[v] + 1) for v in range(n - 1))):
        last = -sum(head)
        if not lo[n - 1] <= last <= hi[n - 1]:
            continue
        p = head + (last,)
        if layer is not None and sum(a * b for a, b in zip(layer, p)) != k:
            continue
        if contains_point(g, p, scale=k) is not None:
            count += 1
    return count


def _sumsets(g, kmax):
    vecs = []
    for t, h in g.arcs:
        v = [0] * g.n
        v[h] += 1
        v[t] -= 1
        vecs.append(tuple(v))
    levels = [{(0,) * g.n}]
    for _ in range(kmax):
        nxt = set()
        for p in levels[-1]:
            for v in vecs:
                nxt.add(tuple(a + b for a, b in zip(p, v)))
        levels.append(nxt)
    return levels


def ehrhart_table(g, kmax, backend="box"):
    if backend == "sums":
        if g.m == 0:
            return [1] + [0] * kmax
        return [len(s) for s in _sumsets(g, kmax)]
    return [ehrhart_count(g, k, backend) for k in range(kmax + 1)]


def h_star_from_ehrhart(g, backend="box"):
    """Interior polynomial recovered from lattice-point counts.

    Uses ``I(t) = (1-t)^(|V|-1) Ehr(t)``, which holds for any semi-balanced
    graph with the disconnected convention.  Counts are taken up to
    ``k = |V| - 1`` and the top coefficient must vanish.
    """
    _require_semi_balanced(g)
    if g.m == 0:
        if g.n <= 1:
            return ONE
        # isolated vertices: product of (1-t)^(c-1) with trivial factors
        return ONE_MINUS_T ** (g.n - 1)
    d = g.n - 2
    counts = ehrhart_table(g, d + 1, backend)
    h = h_from_counts(counts, d)
    if h[d + 1] != 0:
        raise ArithmeticError(f"inconsistent lattice-point table {counts}: "
                              f"h_{d + 1} = {h[d + 1]}")
    return Polynomial(h)


# graph surgery for the identities

def disjoint_union(g1, g2):
    off = g1.n
    arcs = list(g1.arcs) + [(t + off, h + off) for t, h in g2.arcs]
    return DirectedGraph(g1.n + g2.n, arcs, multi=g1.multi or g2.multi)


def fuse(g1, g2, glue):
    """Glue ``g2`` onto ``g1``.

    ``glue`` is ``("vertex", v1, v2)`` to identify two vertices, or
    ``("edge", e1, e2)`` to identify arc ``e2`` of ``g2`` with arc ``e1`` of
    ``g1`` (tail with tail, head with head).  Returns the fused graph.
    """
    kind = glue[0]
    if kind == "vertex":
        pairs = {int(glue[2]): int(glue[1])}
        shared_arc = None
    elif kind == "edge":
        e1, e2 = int(glue[1]), int(glue[2])
        (t1, h1), (t2, h2) = g1.arcs[e1], g2.arcs[e2]
        pairs = {t2: t1, h2: h1}
        shared_arc = e2
    else:
        raise GraphError(f"unknown glue {kind!r}")
    for v2, v1 in pairs.items():
        if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
            raise GraphError("glue vertex out of range")
    vmap, nxt = {}, g1.n
    for v in range(g2.n):
        if v in pairs:
            vmap[v] = pairs[v]
        else:
            vmap[v] = nxt
            nxt += 1
    arcs = list(g1.arcs)
    for e, (t, h) in enumerate(g2.arcs):
        if e != shared_arc:
            arcs.append((vmap[t], vmap[h]))
    return DirectedGraph(nxt, arcs)


def verify_product(g1, g2, glue, threads=1):
    """``I`` of the fused graph against the product ``I_1 * I_2``."""
    fused = fuse(g1, g2, glue)
    _require_semi_balanced(fused)
    lhs = interior_disconnected(fused, threads)
    rhs = interior_disconnected(g1, threads) * interior_disconnected(g2, threads)
    return lhs == rhs, lhs, rhs


def is_bridge(g, e):
    return len(g.components(set(range(g.m)) - {e})) > len(g.components())


def verify_bridge(g, e, threads=1):
    """``I(G - e) = (1 - t) I(G)`` for a bridge ``e``."""
    if not is_bridge(g, e):
        raise GraphError(f"arc {e} is not a bridge")
    lhs = interior_disconnected(g.delete_arcs([e]), threads)
    rhs = ONE_MINUS_T * interior_disconnected(g, threads)
    return lhs == rhs, lhs, rhs


def verify_disjoint(g1, g2, backend="sums", threads=1):
    """``I(G1 + G2) = (1 - t) I(G1) I(G2)``, left side from lattice points."""
    union = disjoint_union(g1, g2)
    lhs = h_star_from_ehrhart(union, backend)
    rhs = ONE_MINUS_T * interior_disconnected(g1, threads) * interior_disconnected(g2, threads)
    return lhs == rhs, lhs, rhs


def verify_recursion(g, cycle, threads=1):
    """Alternating sum of ``I(G - S)`` over subsets ``S`` of the plus half."""
    _require_semi_balanced(g)
    plus = sorted(cycle.plus)
    total = Polynomial()
    for r in range(len(plus) + 1):
        for S in combinations(plus, r):
            term = interior_disconnected(g.delete_arcs(S), threads)
            total = total + term if r % 2 == 0 else total - term
    return not total, total


def normalized_volume(g):
    """Number of maximal simplices in any Jaeger dissection, ``I(1)``."""
    return interior_polynomial(g)(1)


"""Exact geometry of root polytopes.

Points live in the vertex-indexed space and are tuples of ``Fraction``
(index = vertex id).  The vertex of the root polytope for an arc ``t -> h``
is ``e_h - e_t``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .digraph import GraphError, semi_balanced_layering
from .lp import feasible_point, rank


def as_point(g, p):
    """Coerce a sequence or {vertex: value} mapping to a tuple of Fractions."""
    if isinstance(p, dict):
        out = [Fraction(0)] * g.n
        for v, x in p.items():
            if not 0 <= int(v) < g.n:
                raise GraphError(f"vertex {v} out of range")
            out[int(v)] = Fraction(x)
        return tuple(out)
    p = tuple(Fraction(x) for x in p)
    if len(p) != g.n:
        raise GraphError(f"point has {len(p)} coordinates, graph has {g.n} vertices")
    return p


def vertex_vector(g, e):
    t, h = g.arcs[e]
    v = [Fraction(0)] * g.n
    v[h] += 1
    v[t] -= 1
    return tuple(v)


def combination(g, coeffs):
    """The point ``sum coeffs[e] * x_e`` for a mapping arc -> coefficient."""
    p = [Fraction(0)] * g.n
    for e, c in coeffs.items():
        c = Fraction(c)
        t, h = g.arcs[e]
        p[h] += c
        p[t] -= c
    return tuple(p)


def affine_independent(g, arcs):
    """Whether the vertex vectors of ``arcs`` are affinely independent.

    Combinatorial rule: the arcs contain at most one cycle, and if there is
    one it must have unequally many arcs in the two directions.
    """
    arcs = sorted(set(arcs))
    if not arcs:
        return True
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    extra = []
    for e in arcs:
        t, h = g.arcs[e]
        a, b = find(t), find(h)
        if a == b:
            extra.append(e)
        else:
            parent[a] = b
    if len(extra) == 0:
        return True
    if len(extra) > 1:
        return False
    # exactly one cycle: it must be unbalanced
    from .digraph import DirectedGraph
    sub = DirectedGraph(g.n, [g.arcs[e] for e in arcs], multi=True)
    return semi_balanced_layering(sub) is None


def affine_rank(g, arcs):
    """Rank of the vectors ``(x_e, 1)``; equals the number of arcs iff independent."""
    return rank([list(vertex_vector(g, e)) + [1] for e in arcs])


def affine_independent_by_rank(g, arcs):
    arcs = sorted(set(arcs))
    return affine_rank(g, arcs) == len(arcs)


def polytope_dimension(g):
    """Dimension of the root polytope; -1 when there are no arcs."""
    if g.m == 0:
        return -1
    c = len(g.components())
    layered = semi_balanced_layering(g) is not None
    if c == 1:
        return g.n - 2 if layered else g.n - 1
    if layered:
        return g.n - 1 - c
    return affine_rank(g, range(g.m)) - 1


@dataclass(frozen=True)
class BarycentricCert:
    coefficients: dict    # arc id -> Fraction

    def point(self, g):
        return combination(g, self.coefficients)

    def valid_for(self, g, p):
        c = self.coefficients
        return (all(x >= 0 for x in c.values()) and sum(c.values()) == 1
                and self.point(g) == as_point(g, p))

    @property
    def support(self):
        return frozenset(e for e, x in self.coefficients.items() if x != 0)


def tree_coordinates(g, tree, p):
    """Unique coefficients ``lam`` with ``sum lam_e x_e = p`` over the forest arcs.

    Leaves are peeled one at a time: the coefficient of a leaf arc is fixed
    by the coordinate of the leaf.  Returns None when ``p`` is not in the
    linear span (a component coordinate sum is nonzero).
    """
    p = list(as_point(g, p))
    deg = [0] * g.n
    inc = [set() for _ in range(g.n)]
    for e in tree:
        t, h = g.arcs[e]
        deg[t] += 1
        deg[h] += 1
        inc[t].add(e)
        inc[h].add(e)
    lam = {}
    leaves = [v for v in range(g.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        if deg[v] != 1:
            continue
        (e,) = inc[v]
        t, h = g.arcs[e]
        c = p[v] if v == h else -p[v]
        lam[e] = c
        p[h] -= c
        p[t] += c
        p[v] = Fraction(0)
        w = t if v == h else h
        deg[v] = 0
        inc[v].clear()
        inc[w].discard(e)
        deg[w] -= 1
        if deg[w] == 1:
            leaves.append(w)
    if any(x != 0 for x in p):
        return None
    return lam


def barycentric_in_tree(g, tree, p):
    """Certificate that ``p`` lies in the simplex of ``tree``, or None."""
    lam = tree_coordinates(g, tree, p)
    if lam is None or any(x < 0 for x in lam.values()) or sum(lam.values()) != 1:
        return None
    return BarycentricCert(lam)


def contains_point(g, p, arcs=None, scale=1):
    """Exact membership of ``p`` in ``scale`` times the convex hull of the arcs.

    Returns a BarycentricCert (coefficients summing to ``scale``) or None.
    """
    p = as_point(g, p)
    arcs = list(range(g.m)) if arcs is None else sorted(arcs)
    if not arcs:
        return None
    A = [[0] * len(arcs) for _ in range(g.n + 1)]
    for j, e in enumerate(arcs):
        t, h = g.arcs[e]
        A[h][j] = 1
        A[t][j] = -1
        A[g.n][j] = 1
    x = feasible_point(A, list(p) + [Fraction(scale)])
    if x is None:
        return None
    return BarycentricCert({e: x[j] for j, e in enumerate(arcs)})


@dataclass(frozen=True)
class SeparatingFunctional:
    values: tuple         # per vertex, 0 on the base side and 1 elsewhere

    def __call__(self, p):
        return sum(a * b for a, b in zip(self.values, p))

    def on_arc(self, g, e):
        t, h = g.arcs[e]
        return self.values[h] - self.values[t]


def separating_functional(g, tree, pivot, base=0):
    """0/1 functional from the fundamental cut of ``pivot`` in ``tree``."""
    from .digraph import fundamental_cut
    cut = fundamental_cut(g, tree, pivot, base=base)
    return SeparatingFunctional(tuple(0 if v in cut.base_side else 1 for v in range(g.n)))


def random_point_in_tree(g, tree, rng, interior=True):
    """A random rational convex combination of the tree's vertex vectors."""
    tree = sorted(tree)
    lo = 1 if interior else 0
    weights = [rng.randint(lo, 20) for _ in tree]
    if sum(weights) == 0:
        weights[0] = 1
    s = sum(weights)
    return combination(g, {e: Fraction(w, s) for e, w in zip(tree, weights)})

"""Plane ribbon graphs, directed duals, arborescences and greedoid polynomials.

Faces are orbits of darts ``(v, e)`` (leave ``v`` along ``e``) under
``(v, e) -> (w, succ_w(e))`` where ``w`` is the far end of ``e``.  With
counterclockwise rotations each orbit keeps its face on the right.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .digraph import DirectedGraph, GraphError
from .polynomial import Polynomial
from .ribbon import RibbonStructure, check_basis


def trace_faces(g, ribbon):
    """Face cycles as tuples of darts, in order of their smallest dart."""
    seen = set()
    faces = []
    for e in range(g.m):
        for v in g.arcs[e]:
            if (v, e) in seen:
                continue
            orbit = []
            d = (v, e)
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                w = g.other(d[1], d[0])
                d = (w, ribbon.succ(w, d[1]))
            faces.append(tuple(orbit))
    return faces


def genus(g, ribbon):
    if not g.is_connected():
        raise GraphError("genus is defined here for connected graphs only")
    if g.m == 0:
        return 0
    chi = g.n - g.m + len(trace_faces(g, ribbon))
    return (2 - chi) // 2


def is_plane(g, ribbon):
    return g.is_connected() and genus(g, ribbon) == 0


@dataclass(frozen=True)
class PlaneEmbedding:
    graph: DirectedGraph
    ribbon: RibbonStructure
    faces: tuple

    @classmethod
    def of(cls, g, ribbon):
        if not g.is_connected():
            raise GraphError("a plane embedding needs a connected graph")
        if genus(g, ribbon) != 0:
            raise GraphError(f"ribbon structure has genus {genus(g, ribbon)}, not 0")
        return cls(g, ribbon, tuple(trace_faces(g, ribbon)))

    def face_of_dart(self):
        return {d: i for i, f in enumerate(self.faces) for d in f}


@dataclass(frozen=True)
class DualDigraph:
    """Dual graph: vertex ``i`` is face ``i``; arc ``e`` of the dual crosses arc ``e``."""
    graph: DirectedGraph
    ribbon: RibbonStructure
    faces: tuple

    def arc_map(self):
        return {e: e for e in range(self.graph.m)}


def dual(g, ribbon):
    """Directed dual: each arc is turned a quarter counterclockwise.

    The dual arc points from the face on the right of ``e`` to the face on
    its left.  Parallel dual arcs are allowed; a dual loop (a bridge in
    ``g``) is an error.
    """
    emb = PlaneEmbedding.of(g, ribbon)
    where = emb.face_of_dart()
    arcs = []
    for e, (t, h) in enumerate(g.arcs):
        right, left = where[(t, e)], where[(h, e)]
        if right == left:
            raise GraphError(f"arc {e} is a bridge; its dual would be a loop")
        arcs.append((right, left))
    dg = DirectedGraph(len(emb.faces), arcs, multi=True)
    # an orbit runs clockwise around its face, so reverse it
    rot = [tuple(e for _, e in reversed(f)) for f in emb.faces]
    return DualDigraph(dg, RibbonStructure(dg, rot), emb.faces)


def is_eulerian(g):
    if g.m == 0 or not g.is_connected():
        return False
    return all(g.indegree(v) == g.outdegree(v) for v in range(g.n))


def tree_dual(g, tree):
    """Dual arcs of the arcs not in ``tree`` (same ids)."""
    return frozenset(range(g.m)) - frozenset(tree)


def root_from_basis(g, ribbon, basis, d=None):
    """Root of the dual arborescences matching Jaeger trees for ``basis``."""
    basis = check_basis(g, basis)
    d = d if d is not None else dual(g, ribbon)
    t, h = d.graph.arcs[basis.arc]
    return t if basis.node == g.tail(basis.arc) else h


def _reachable(g, root):
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for e in g.incident(v):
            if g.tail(e) == v and g.head(e) not in seen:
                seen.add(g.head(e))
                stack.append(g.head(e))
    return seen


def enumerate_arborescences(g, root):
    """Spanning arborescences rooted at ``root`` as sorted arc-id frozensets.

    Every other vertex picks one incoming arc; a choice is kept when
    following parents from any vertex reaches the root.
    """
    if len(_reachable(g, root)) != g.n:
        raise GraphError(f"not every vertex is reachable from {root}")
    others = [v for v in range(g.n) if v != root]
    ins = [[e for e in g.incident(v) if g.head(e) == v and g.tail(e) != v] for v in others]
    out = []
    for pick in product(*ins):
        parent = {v: g.tail(e) for v, e in zip(others, pick)}
        ok = True
        for v in others:
            seen = set()
            while v != root:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                v = parent[v]
            if not ok:
                break
        if ok:
            out.append(frozenset(pick))
    return sorted(out, key=sorted)


def _h_from_facets(facets, dim_plus_one):
    """``sum h_i t^(D-i)`` for a pure complex given by facets of size ``D``."""
    faces = set()
    for f in facets:
        f = sorted(f)
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    D = dim_plus_one
    fvec = [0] * (D + 1)               # fvec[k] = number of faces with k elements
    for s in faces:
        fvec[len(s)] += 1
    tm1 = Polynomial([-1, 1])
    lam = Polynomial()
    for k in range(D + 1):
        lam = lam + fvec[k] * tm1 ** (D - k)
    return lam


def greedoid_polynomial(g, ribbon, root, route="dual"):
    """Greedoid polynomial of the branching greedoid of an Eulerian plane digraph.

    ``route="dual"`` transforms the interior polynomial of the dual;
    ``route="complex"`` reads the h-vector of the complex whose facets are the
    complements of the spanning arborescences rooted at ``root``.
    """
    if not is_eulerian(g):
        raise GraphError("graph is not Eulerian")
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range")
    if len(_reachable(g, root)) != g.n:
        raise GraphError(f"not every vertex is reachable from {root}")
    D = g.m - g.n + 1
    if route == "dual":
        from .invariants import interior_polynomial
        d = dual(g, ribbon)
        return interior_polynomial(d.graph, d.ribbon).reciprocal(D)
    if route == "complex":
        every = frozenset(range(g.m))
        facets = [every - a for a in enumerate_arborescences(g, root)]
        return _h_from_facets(facets, D)
    raise ValueError(f"unknown route {route!r}")


def double_dual_vertex_map(g, ribbon):
    """Match faces of the double dual with vertices of ``g``.

    Returns the map when every arc of the double dual is the reverse of
    the corresponding arc of ``g``, else None.
    """
    d = dual(g, ribbon)
    dd = dual(d.graph, d.ribbon)
    vmap = {}
    for e, (t, h) in enumerate(dd.graph.arcs):
        gt, gh = g.arcs[e]
        for a, b in ((t, gh), (h, gt)):
            if vmap.setdefault(a, b) != b:
                return None
    if sorted(vmap.values()) != list(range(g.n)):
        return None
    return vmap

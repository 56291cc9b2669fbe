"""Finding the Jaeger tree whose simplex holds a point; hypertrees and markers.

``jaeger_tree_for_point`` walks like a tour but deletes each arc met at its
tail whenever the remaining graph stays connected and still contains the
point in its root polytope.  The Bernardi process is the same walk driven by
a hypertree on one colour class of a bipartite graph with all arcs pointing
from ``U`` to ``W``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .digraph import GraphError, check_spanning_tree, semi_balanced_layering
from .geometry import as_point, contains_point
from .ribbon import check_basis


class PointError(GraphError):
    pass


class _Rotation:
    """Mutable view of a ribbon structure restricted to surviving arcs."""

    def __init__(self, ribbon):
        self.nxt = {}
        self.prv = {}
        for v, rot in enumerate(ribbon.rotation):
            k = len(rot)
            for i, e in enumerate(rot):
                self.nxt[(v, e)] = rot[(i + 1) % k]
                self.prv[(v, e)] = rot[(i - 1) % k]

    def succ(self, v, e):
        return self.nxt[(v, e)]

    def remove(self, g, e):
        for v in g.arcs[e]:
            p, n = self.prv.pop((v, e)), self.nxt.pop((v, e))
            if p != e:
                self.nxt[(v, p)] = n
                self.prv[(v, n)] = p


def _walk(g, ribbon, basis, may_cut, removable):
    """Shared driver for the point-location walk and the Bernardi process.

    ``may_cut(v, e)`` says whether the current pair is a candidate for
    deletion; ``removable(alive, e)`` decides it.  The walk stops when a
    candidate pair recurs.
    """
    basis = check_basis(g, basis)
    rot = _Rotation(ribbon)
    alive = set(range(g.m))
    seen = set()
    cur = (basis.node, basis.arc)
    for _ in range(8 * g.m + 8):
        v, e = cur
        if may_cut(v, e):
            if cur in seen:
                return frozenset(alive)
            seen.add(cur)
            if removable(alive, e):
                nxt = rot.succ(v, e)
                alive.discard(e)
                rot.remove(g, e)
                cur = (v, nxt)
                continue
        w = g.other(e, v)
        cur = (w, rot.succ(w, e))
    raise PointError("walk did not terminate")


def jaeger_tree_for_point(g, ribbon, basis, p):
    """The smallest spanning tree in the tree order whose simplex contains ``p``.

    ``g`` must be connected and semi-balanced and ``p`` must lie in its
    root polytope.
    """
    p = as_point(g, p)
    if not g.is_connected():
        raise PointError("graph is not connected")
    if semi_balanced_layering(g) is None:
        raise PointError("graph is not semi-balanced")
    cert = contains_point(g, p)
    if cert is None:
        raise PointError("point is not in the root polytope")
    state = {"lam": cert.coefficients}

    def removable(alive, e):
        rest = alive - {e}
        if not g.is_connected(rest):
            return False
        lam = state["lam"]
        if lam.get(e, 0) == 0:
            # the current certificate already avoids e
            return True
        c = contains_point(g, p, arcs=rest)
        if c is None:
            return False
        state["lam"] = c.coefficients
        return True

    tree = _walk(g, ribbon, basis, lambda v, e: g.tail(e) == v, removable)
    return check_spanning_tree(g, tree)


# hypertrees on bipartite graphs with all arcs from U to W

def color_classes(g):
    """``(U, W)`` for a graph whose every vertex is a pure source or a pure sink."""
    U, W = [], []
    for v in range(g.n):
        out, inn = g.outdegree(v), g.indegree(v)
        if out and inn:
            raise GraphError(f"vertex {v} has both in- and out-arcs; "
                             f"not a standard orientation")
        (U if out else W).append(v)
    if not U or not W:
        raise GraphError("graph has an empty colour class")
    return U, W


@dataclass(frozen=True)
class Hypertree:
    side: str             # "U" or "W"
    values: tuple         # (vertex, value) pairs for the vertices of that side

    def as_dict(self):
        return dict(self.values)


def make_hypertree(g, side, values):
    U, W = color_classes(g)
    verts = U if side == "U" else W
    if side not in ("U", "W"):
        raise GraphError("side must be 'U' or 'W'")
    values = dict(values)
    extra = set(values) - set(verts)
    if extra:
        raise GraphError(f"vertices {sorted(extra)} are not on side {side}")
    return Hypertree(side, tuple((v, int(values.get(v, 0))) for v in verts))


def hypertree_of_tree(g, tree, side):
    """Degrees minus one on the chosen side of a spanning tree."""
    tree = check_spanning_tree(g, tree)
    U, W = color_classes(g)
    verts = U if side == "U" else W
    deg = {v: 0 for v in verts}
    for e in tree:
        for v in g.arcs[e]:
            if v in deg:
                deg[v] += 1
    return Hypertree(side, tuple((v, deg[v] - 1) for v in verts))


def marker(g, h):
    """The marker point of a hypertree."""
    U, W = color_classes(g)
    nu, nw = len(U), len(W)
    vals = h.as_dict()
    p = [Fraction(0)] * g.n
    if h.side == "U":
        for u in U:
            p[u] = Fraction(-vals.get(u, 0), nw) - Fraction(1, nu * nw)
        for w in W:
            p[w] = Fraction(1, nw)
    else:
        for w in W:
            p[w] = Fraction(vals.get(w, 0), nu) + Fraction(1, nu * nw)
        for u in U:
            p[u] = Fraction(-1, nu)
    return tuple(p)


def is_hypertree(g, h, arcs=None):
    """Whether ``h`` is realised by a spanning tree using only ``arcs``.

    Decided geometrically: the arc set must connect the graph and contain
    the marker of ``h`` in its root polytope.
    """
    arcs = set(range(g.m)) if arcs is None else set(arcs)
    if not g.is_connected(arcs):
        return False
    vals = h.as_dict()
    if any(x < 0 for x in vals.values()):
        return False
    return contains_point(g, marker(g, h), arcs=arcs) is not None


def bernardi(g, ribbon, basis, h, cut="U"):
    """The Bernardi process for hypertree ``h``, cutting at vertices of ``cut``.

    At a current vertex of the cut side the arc is deleted whenever ``h``
    stays a hypertree of the remaining graph; otherwise the walk crosses
    the arc.  At the other side it always crosses.  The walk stops as soon
    as some pair becomes current for the second time.

    With ``cut="U"`` (the tails) the result is the Jaeger tree holding the
    marker of ``h``, whichever side ``h`` lives on.  ``cut="W"`` gives the
    Jaeger tree of the reversed graph holding minus the marker.
    """
    U, W = color_classes(g)
    if not is_hypertree(g, h):
        raise PointError("input is not a hypertree")
    side = set(U if cut == "U" else W)
    basis = check_basis(g, basis)
    rot = _Rotation(ribbon)
    alive = set(range(g.m))
    seen = set()
    cur = (basis.node, basis.arc)
    while cur not in seen:
        seen.add(cur)
        v, e = cur
        if v in side and is_hypertree(g, h, alive - {e}):
            nxt = rot.succ(v, e)
            alive.discard(e)
            rot.remove(g, e)
            cur = (v, nxt)
        else:
            w = g.other(e, v)
            cur = (w, rot.succ(w, e))
    return check_spanning_tree(g, alive)


def enumerate_hypertrees(g, side):
    """All hypertrees on ``side``, read off the spanning trees (test oracle)."""
    from .digraph import enumerate_spanning_trees
    seen = {}
    for t in enumerate_spanning_trees(g):
        h = hypertree_of_tree(g, t, side)
        seen.setdefault(h.values, h)
    return [seen[k] for k in sorted(seen)]


def minimal_tree_containing(g, ribbon, basis, p):
    """Brute-force smallest spanning tree whose simplex contains ``p``."""
    import functools
    from .digraph import enumerate_spanning_trees
    from .geometry import barycentric_in_tree
    from .ribbon import compare_prec
    trees = [t for t in enumerate_spanning_trees(g) if barycentric_in_tree(g, t, p)]
    if not trees:
        return None
    return min(trees, key=functools.cmp_to_key(
        lambda a, b: compare_prec(g, ribbon, basis, a, b)))

"""Directed graphs, layerings, fundamental cuts and cycles, spanning trees.

Vertices are the integers ``0..n-1`` and arcs are identified by their index
in ``DirectedGraph.arcs``.  Spanning trees and other arc sets are plain
``frozenset`` objects of arc ids.
"""

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Raised when a graph or arc set violates a precondition."""


class DirectedGraph:
    """A finite directed graph without loops.

    Multiple arcs between the same pair of vertices are rejected unless
    ``multi=True`` is passed; the only producer of such graphs inside the
    package is the planar dual of small plane graphs.
    """

    __slots__ = ("n", "arcs", "multi", "_inc")

    def __init__(self, n, arcs, multi=False):
        n = int(n)
        if n < 0:
            raise GraphError("negative vertex count")
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        seen = set()
        for e, (t, h) in enumerate(arcs):
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"arc {e} has an endpoint outside 0..{n - 1}")
            if t == h:
                raise GraphError(f"arc {e} is a loop at vertex {t}")
            key = (min(t, h), max(t, h))
            if key in seen and not multi:
                raise GraphError(f"arc {e} duplicates the vertex pair {key}")
            seen.add(key)
        self.n = n
        self.arcs = arcs
        self.multi = bool(multi)
        inc = [[] for _ in range(n)]
        for e, (t, h) in enumerate(arcs):
            inc[t].append(e)
            inc[h].append(e)
        self._inc = tuple(tuple(x) for x in inc)

    @property
    def m(self):
        return len(self.arcs)

    def tail(self, e):
        return self.arcs[e][0]

    def head(self, e):
        return self.arcs[e][1]

    def other(self, e, v):
        t, h = self.arcs[e]
        if v == t:
            return h
        if v == h:
            return t
        raise GraphError(f"vertex {v} is not an endpoint of arc {e}")

    def incident(self, v):
        return self._inc[v]

    def outdegree(self, v):
        return sum(1 for e in self._inc[v] if self.arcs[e][0] == v)

    def indegree(self, v):
        return sum(1 for e in self._inc[v] if self.arcs[e][1] == v)

    def __eq__(self, other):
        return (isinstance(other, DirectedGraph) and self.n == other.n
                and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"DirectedGraph({self.n}, {list(self.arcs)!r})"

    # derived graphs

    def reverse(self):
        return DirectedGraph(self.n, [(h, t) for t, h in self.arcs], multi=self.multi)

    def delete_arcs(self, removed):
        """Graph on the same vertices without the arcs in ``removed``.

        Surviving arcs are renumbered densely, keeping their relative order.
        """
        removed = set(removed)
        kept = [a for e, a in enumerate(self.arcs) if e not in removed]
        return DirectedGraph(self.n, kept, multi=self.multi)

    def induced(self, vertices):
        """Subgraph induced by ``vertices`` with vertices relabelled in order.

        Returns ``(graph, vertex_map, arc_map)`` where the maps send old ids
        to new ids.
        """
        vertices = sorted(vertices)
        vmap = {v: i for i, v in enumerate(vertices)}
        arcs, amap = [], {}
        for e, (t, h) in enumerate(self.arcs):
            if t in vmap and h in vmap:
                amap[e] = len(arcs)
                arcs.append((vmap[t], vmap[h]))
        return DirectedGraph(len(vertices), arcs, multi=self.multi), vmap, amap

    # connectivity

    def component_labels(self, arcs=None):
        """Label each vertex with the index of its weak component.

        Only the arcs in ``arcs`` are used (all arcs when None).  Components
        are numbered by their smallest vertex.
        """
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in (range(self.m) if arcs is None else arcs):
            t, h = self.arcs[e]
            a, b = find(t), find(h)
            if a != b:
                parent[max(a, b)] = min(a, b)
        roots, labels = {}, []
        for v in range(self.n):
            r = find(v)
            labels.append(roots.setdefault(r, len(roots)))
        return labels

    def components(self, arcs=None):
        labels = self.component_labels(arcs)
        comps = [[] for _ in range(max(labels, default=-1) + 1)]
        for v, c in enumerate(labels):
            comps[c].append(v)
        return comps

    def is_connected(self, arcs=None):
        return self.n <= 1 or max(self.component_labels(arcs)) == 0

    def component_subgraphs(self):
        """Split into weak components, each relabelled with ``induced``."""
        return [self.induced(c) for c in self.components()]


def is_spanning_tree(g, arcs):
    arcs = frozenset(arcs)
    return len(arcs) == g.n - 1 and g.is_connected(arcs)


def check_spanning_tree(g, tree):
    tree = frozenset(tree)
    if any(not 0 <= e < g.m for e in tree):
        raise GraphError("tree contains an unknown arc id")
    if not is_spanning_tree(g, tree):
        raise GraphError("arc set is not a spanning tree")
    return tree


def semi_balanced_layering(g):
    """A potential rising by one along every arc, or None if none exists.

    The potential is returned as a tuple indexed by vertex and normalised so
    that its minimum on every weak component is 0.
    """
    pot = [None] * g.n
    for s in range(g.n):
        if pot[s] is not None:
            continue
        pot[s] = 0
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                t, h = g.arcs[e]
                w, want = (h, pot[v] + 1) if v == t else (t, pot[v] - 1)
                if pot[w] is None:
                    pot[w] = want
                    comp.append(w)
                    queue.append(w)
                elif pot[w] != want:
                    return None
        low = min(pot[v] for v in comp)
        for v in comp:
            pot[v] -= low
    return tuple(pot)


def is_semi_balanced(g):
    return semi_balanced_layering(g) is not None


@dataclass(frozen=True)
class FundamentalCut:
    pivot: int
    arcs: frozenset
    base_side: frozenset          # vertices of the component holding the base vertex
    tail_in_base: dict            # arc id -> whether its tail lies in base_side

    def opposite(self, e, f):
        """Whether arcs ``e`` and ``f`` of the cut have tails on different sides."""
        return self.tail_in_base[e] != self.tail_in_base[f]


@dataclass(frozen=True)
class CycleWithSides:
    vertices: tuple               # v_0 .. v_{r-1}; arcs[i] joins v_i and v_{i+1}
    arcs: tuple
    plus: frozenset
    minus: frozenset
    reference: int

    def __len__(self):
        return len(self.arcs)

    def is_balanced(self):
        return len(self.plus) == len(self.minus)

    def swapped(self):
        """The same cycle with the roles of the two halves exchanged."""
        ref = min(self.minus)
        return CycleWithSides(self.vertices, self.arcs, self.minus, self.plus, ref)


def cycle_from_vertices(g, vertices, arcs, reference=None):
    """Build a CycleWithSides from a closed walk given by vertices and arcs.

    ``arcs[i]`` must join ``vertices[i]`` and ``vertices[i+1]`` (indices
    modulo the length).  The reference arc defaults to ``arcs[0]``.
    """
    vertices, arcs = tuple(vertices), tuple(arcs)
    r = len(arcs)
    if r < 2 or len(vertices) != r or len(set(vertices)) != r or len(set(arcs)) != r:
        raise GraphError("not a simple cycle")
    forward = []
    for i, e in enumerate(arcs):
        a, b = vertices[i], vertices[(i + 1) % r]
        t, h = g.arcs[e]
        if (t, h) == (a, b):
            forward.append(True)
        elif (t, h) == (b, a):
            forward.append(False)
        else:
            raise GraphError(f"arc {e} does not join {a} and {b}")
    if reference is None:
        reference = arcs[0]
    ref_dir = forward[arcs.index(reference)]
    plus = frozenset(e for e, f in zip(arcs, forward) if f == ref_dir)
    return CycleWithSides(vertices, arcs, plus, frozenset(arcs) - plus, reference)


def cycle_from_arcs(g, arcs, reference=None):
    """Order an arc set forming a single cycle and split it into halves."""
    arcs = list(arcs)
    if len(arcs) < 2:
        raise GraphError("a cycle needs at least two arcs")
    inc = {}
    for e in arcs:
        for v in g.arcs[e]:
            inc.setdefault(v, []).append(e)
    if any(len(es) != 2 for es in inc.values()) or len(inc) != len(arcs):
        raise GraphError("arc set is not a single cycle")
    start = reference if reference is not None else min(arcs)
    v0 = g.tail(start)
    verts, order = [v0], [start]
    v = g.other(start, v0)
    prev = start
    while v != v0:
        verts.append(v)
        a, b = inc[v]
        nxt = b if a == prev else a
        order.append(nxt)
        v = g.other(nxt, v)
        prev = nxt
    if len(order) != len(arcs):
        raise GraphError("arc set is not a single cycle")
    return cycle_from_vertices(g, verts, order, reference=start)


def _tree_adjacency(g, tree):
    adj = [[] for _ in range(g.n)]
    for e in tree:
        t, h = g.arcs[e]
        adj[t].append((h, e))
        adj[h].append((t, e))
    return adj


def tree_path(g, tree, a, b):
    """Vertices and arcs of the path from ``a`` to ``b`` inside ``tree``."""
    adj = _tree_adjacency(g, tree)
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w, e in adj[v]:
            if w not in prev:
                prev[w] = (v, e)
                queue.append(w)
    if b not in prev:
        raise GraphError(f"no path from {a} to {b} in the tree")
    verts, arcs = [b], []
    while prev[verts[-1]] is not None:
        v, e = prev[verts[-1]]
        arcs.append(e)
        verts.append(v)
    return verts[::-1], arcs[::-1]


def fundamental_cut(g, tree, pivot, base=0):
    """All arcs between the two components of ``tree - pivot``.

    ``base`` is the base vertex; the component containing it is the base
    side.
    """
    tree = frozenset(tree)
    if pivot not in tree:
        raise GraphError(f"pivot arc {pivot} is not in the tree")
    labels = g.component_labels(tree - {pivot})
    side = labels[base]
    base_side = frozenset(v for v in range(g.n) if labels[v] == side)
    cut = frozenset(e for e, (t, h) in enumerate(g.arcs)
                    if (t in base_side) != (h in base_side))
    return FundamentalCut(pivot, cut, base_side,
                          {e: g.tail(e) in base_side for e in cut})


def fundamental_cycle(g, tree, pivot):
    """The unique cycle of ``tree + pivot``, halves relative to ``pivot``."""
    tree = frozenset(tree)
    if pivot in tree:
        raise GraphError(f"pivot arc {pivot} is already in the tree")
    t, h = g.arcs[pivot]
    verts, arcs = tree_path(g, tree, h, t)
    return cycle_from_vertices(g, [t] + verts[:-1], [pivot] + arcs, reference=pivot)


def enumerate_spanning_trees(g):
    """Every spanning tree once, by deletion/contraction over arc ids."""
    if not g.is_connected():
        raise GraphError("graph is not connected")
    m, n = g.m, g.n
    parent = list(range(n))
    out = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(e, chosen, removed):
        if len(chosen) == n - 1:
            out.append(frozenset(chosen))
            return
        if m - e < n - 1 - len(chosen):
            return
        t, h = g.arcs[e]
        a, b = find(t), find(h)
        if a != b:
            parent[a] = b
            chosen.append(e)
            rec(e + 1, chosen, removed)
            chosen.pop()
            parent[a] = a
        removed.add(e)
        if g.is_connected(set(range(m)) - removed):
            rec(e + 1, chosen, removed)
        removed.discard(e)

    rec(0, [], set())
    return out


def enumerate_cycles(g):
    """Every simple cycle of the underlying graph, as CycleWithSides.

    Each cycle is reported once; the reference arc is its smallest arc id.
    """
    seen = set()
    out = []
    for s in range(g.n):
        # cycles whose smallest vertex is s
        stack = [(s, [s], [])]
        while stack:
            v, verts, arcs = stack.pop()
            for e in g.incident(v):
                if arcs and e == arcs[-1]:
                    continue
                w = g.other(e, v)
                if w == s and len(arcs) >= 1 and e not in arcs:
                    key = frozenset(arcs + [e])
                    if len(key) >= 2 and key not in seen:
                        seen.add(key)
                        out.append(key)
                elif w > s and w not in verts:
                    stack.append((w, verts + [w], arcs + [e]))
    out.sort(key=lambda k: (len(k), sorted(k)))
    return [cycle_from_arcs(g, k, reference=min(k)) for k in out]


def reverse_directed_cut(g, side):
    """Reverse every arc between ``side`` and the rest.

    All those arcs must point the same way across, otherwise GraphError.
    """
    side = set(side)
    leaving = {(t in side) for t, h in g.arcs if (t in side) != (h in side)}
    if len(leaving) > 1:
        raise GraphError("not a directed cut")
    arcs = [(h, t) if (t in side) != (h in side) else (t, h) for t, h in g.arcs]
    return DirectedGraph(g.n, arcs, multi=g.multi)

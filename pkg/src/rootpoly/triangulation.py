"""Whether two tree simplices meet in a common face; triangulation checks.

Two trees ``T1`` and ``T2`` fail to meet in a common face exactly when some
cycle has one half inside ``T1`` and the other half inside ``T2`` (an
incompatible cycle).  The search reverses ``T2``, contracts the arcs the two
trees share and looks for a directed cycle.
"""

from dataclasses import dataclass

from .digraph import GraphError, check_spanning_tree, cycle_from_vertices, tree_path
from .ribbon import check_basis, enumerate_jaeger_trees


@dataclass(frozen=True)
class CommonFace:
    """Certificate: a vertex weighting ``f`` vanishing on shared arcs,
    positive on arcs only in the first tree and negative on arcs only in
    the second."""
    functional: tuple

    def on_arc(self, g, e):
        t, h = g.arcs[e]
        return self.functional[h] - self.functional[t]


@dataclass(frozen=True)
class IncompatibilityWitness:
    tree1: frozenset
    tree2: frozenset
    cycle: object         # CycleWithSides

    def is_valid(self):
        c = self.cycle
        return (c.plus <= self.tree1 and c.minus <= self.tree2
                and c.reference in self.tree1 and c.reference in c.plus)


def common_face_test(g, t1, t2):
    """CommonFace certificate or IncompatibilityWitness for two spanning trees."""
    t1 = check_spanning_tree(g, t1)
    t2 = check_spanning_tree(g, t2)
    shared = t1 & t2
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in shared:
        a, b = find(g.tail(e)), find(g.head(e))
        if a != b:
            parent[a] = b
    # contracted digraph: T1-only arcs forward, T2-only arcs backward
    out = {}
    for e in sorted(t1 - shared):
        t, h = g.arcs[e]
        out.setdefault(find(t), []).append((find(h), e, t, h))
    for e in sorted(t2 - shared):
        t, h = g.arcs[e]
        out.setdefault(find(h), []).append((find(t), e, h, t))

    classes = sorted({find(v) for v in range(g.n)})
    color = {c: 0 for c in classes}
    order = []
    via = {}
    for root in classes:
        if color[root]:
            continue
        stack = [(root, iter(out.get(root, ())))]
        color[root] = 1
        while stack:
            c, it = stack[-1]
            step = next(it, None)
            if step is None:
                color[c] = 2
                order.append(c)
                stack.pop()
                continue
            d, e, a, b = step
            if color[d] == 0:
                color[d] = 1
                via[d] = (c, e, a, b)
                stack.append((d, iter(out.get(d, ()))))
            elif color[d] == 1:
                return _decode(g, t1, t2, shared, via, c, d, (c, e, a, b))
    rank = {c: i for i, c in enumerate(reversed(order))}
    return CommonFace(tuple(rank[find(v)] for v in range(g.n)))


def _decode(g, t1, t2, shared, via, last, first, closing):
    # class path first -> ... -> last, then the closing step last -> first
    steps = [closing]
    c = last
    while c != first:
        p = via[c]
        steps.append(p)
        c = p[0]
    steps.reverse()
    walk_v, walk_a = _flatten(steps, g, shared)
    ref = next(e for (_, e, _, _) in steps if e in t1 and e not in t2)
    cyc = cycle_from_vertices(g, walk_v, walk_a, reference=ref)
    return IncompatibilityWitness(t1, t2, cyc)


def _flatten(steps, g, shared):
    verts, arcs = [], []
    k = len(steps)
    for i, (_, e, a, b) in enumerate(steps):
        verts.append(a)
        arcs.append(e)
        entry = steps[(i + 1) % k][2]
        pv, pa = tree_path(g, shared, b, entry)
        verts.extend(pv[:-1])
        arcs.extend(pa)
    return verts, arcs


def is_triangulation(g, ribbon, basis, trees=None):
    """``(True, None)`` or ``(False, witness)`` for the Jaeger dissection.

    Pairs are tested in increasing tree order, so the reported witness is
    the one for the lexicographically least failing pair.
    """
    basis = check_basis(g, basis)
    if trees is None:
        trees = enumerate_jaeger_trees(g, ribbon, basis)
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            res = common_face_test(g, trees[i], trees[j])
            if isinstance(res, IncompatibilityWitness):
                return False, res
    return True, None


def incompatible_cycles(g, ribbon, basis):
    """All cycles that are incompatible for some pair of Jaeger trees."""
    from .digraph import enumerate_cycles
    trees = enumerate_jaeger_trees(g, ribbon, basis)
    out = []
    for c in enumerate_cycles(g):
        for half in (c, c.swapped()):
            if (any(half.plus <= t for t in trees)
                    and any(half.minus <= t for t in trees)):
                out.append(half)
                break
    return out


def cycle_sides(g, ribbon, cycle):
    """Map each (cycle vertex, off-cycle arc) incidence to 'right' or 'left'.

    At ``v_i`` the right side consists of the arcs strictly after the arc to
    ``v_{i-1}`` up to and including the arc to ``v_{i+1}`` in the rotation.
    """
    side = {}
    for i, v in enumerate(cycle.vertices):
        prev_arc, next_arc = cycle.arcs[i - 1], cycle.arcs[i]
        rot = ribbon.rotation[v]
        k = len(rot)
        start = ribbon.position(v, prev_arc)
        right = True
        for step in range(1, k + 1):
            e = rot[(start + step) % k]
            if e not in cycle.arcs:
                side[(v, e)] = "right" if right else "left"
            if e == next_arc:
                right = False
    return side


def is_separating_cycle(g, ribbon, cycle):
    """True when no path leaves the cycle on its right and returns on its left."""
    on_cycle = set(cycle.vertices)
    cyc_arcs = set(cycle.arcs)
    side = cycle_sides(g, ribbon, cycle)
    # chords: a single arc joining two cycle vertices
    for e, (t, h) in enumerate(g.arcs):
        if e in cyc_arcs or t not in on_cycle or h not in on_cycle:
            continue
        if side[(t, e)] != side[(h, e)]:
            return False
    # bridges through the rest of the graph
    inner = [e for e, (t, h) in enumerate(g.arcs)
             if t not in on_cycle and h not in on_cycle]
    labels = g.component_labels(inner)
    sides_of = {}
    for (v, e), s in side.items():
        w = g.other(e, v)
        if w in on_cycle:
            continue
        sides_of.setdefault(labels[w], set()).add(s)
    return not any(len(s) == 2 for s in sides_of.values())


def face_genus(g, ribbon):
    """Genus of the surface of a connected ribbon graph, by face tracing."""
    from .planar import trace_faces
    faces = trace_faces(g, ribbon)
    chi = g.n - g.m + len(faces)
    if g.is_connected():
        return (2 - chi) // 2
    raise GraphError("genus is only computed for connected graphs")

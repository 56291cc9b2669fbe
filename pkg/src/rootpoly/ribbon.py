"""Ribbon structures, tours of spanning trees, Jaeger trees and the tree order.

A ribbon structure is a rotation system: a cyclic order of the incident arcs
at every vertex.  Together with a basis (a vertex and an incident arc) it
defines, for each spanning tree, a walk called its tour.
"""

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .digraph import GraphError, check_spanning_tree, fundamental_cut


class RibbonError(GraphError):
    pass


class RibbonStructure:
    """Cyclic order of incident arcs at every vertex of ``g``."""

    __slots__ = ("graph", "rotation", "_pos")

    def __init__(self, g, rotation):
        if len(rotation) != g.n:
            raise RibbonError("rotation must list every vertex")
        rotation = tuple(tuple(int(e) for e in rotation[v]) for v in range(g.n))
        pos = []
        for v, rot in enumerate(rotation):
            if sorted(rot) != sorted(g.incident(v)):
                raise RibbonError(f"rotation at vertex {v} is not a permutation "
                                  f"of its incident arcs")
            pos.append({e: i for i, e in enumerate(rot)})
        self.graph = g
        self.rotation = rotation
        self._pos = tuple(pos)

    def succ(self, v, e):
        rot = self.rotation[v]
        return rot[(self._pos[v][e] + 1) % len(rot)]

    def pred(self, v, e):
        rot = self.rotation[v]
        return rot[(self._pos[v][e] - 1) % len(rot)]

    def position(self, v, e):
        return self._pos[v][e]

    def reversed(self):
        """The ribbon structure with every cyclic order inverted."""
        return RibbonStructure(self.graph, [rot[::-1] for rot in self.rotation])

    def on(self, g):
        """Same rotations on another graph with the same incidences."""
        return RibbonStructure(g, self.rotation)

    def __eq__(self, other):
        if not isinstance(other, RibbonStructure):
            return NotImplemented
        if self.graph != other.graph:
            return False
        return all(_same_cycle(a, b) for a, b in zip(self.rotation, other.rotation))

    def __repr__(self):
        return f"RibbonStructure({list(map(list, self.rotation))})"

    @classmethod
    def canonical(cls, g):
        """Incident arcs in increasing id order at every vertex."""
        return cls(g, [sorted(g.incident(v)) for v in range(g.n)])

    @classmethod
    def from_positions(cls, g, positions):
        """Counterclockwise order of arcs around each vertex of a drawing.

        ``positions`` maps each vertex to a point; arcs are straight segments.
        """
        rot = []
        for v in range(g.n):
            x0, y0 = positions[v]

            def angle(e, v=v, x0=x0, y0=y0):
                x1, y1 = positions[g.other(e, v)]
                return math.atan2(y1 - y0, x1 - x0)

            rot.append(sorted(g.incident(v), key=angle))
        return cls(g, rot)

    @classmethod
    def random(cls, g, rng=None):
        rng = rng if rng is not None else random.Random(0)
        rot = []
        for v in range(g.n):
            arcs = list(g.incident(v))
            rng.shuffle(arcs)
            rot.append(arcs)
        return cls(g, rot)


def _same_cycle(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    if a[0] not in b:
        return False
    k = b.index(a[0])
    return tuple(b[k:] + b[:k]) == tuple(a)


class Basis(NamedTuple):
    node: int
    arc: int


def check_basis(g, basis):
    basis = Basis(int(basis[0]), int(basis[1]))
    if not 0 <= basis.arc < g.m or basis.node not in g.arcs[basis.arc]:
        raise RibbonError(f"basis arc {basis.arc} is not incident to {basis.node}")
    return basis


def default_basis(g):
    """Vertex 0 with the first arc of its rotation in the canonical ribbon."""
    if g.m == 0:
        raise RibbonError("graph has no arcs")
    for v in range(g.n):
        if g.incident(v):
            return Basis(v, min(g.incident(v)))


@dataclass(frozen=True)
class Tour:
    steps: tuple          # (vertex, arc) pairs in order
    traversed: tuple      # True where the arc is in the tree

    def __len__(self):
        return len(self.steps)

    def index(self, pair):
        return self.steps.index(pair)


def tour(g, ribbon, basis, tree):
    """The tour of a spanning tree from the basis pair."""
    basis = check_basis(g, basis)
    tree = check_spanning_tree(g, tree)
    start = (basis.node, basis.arc)
    steps, acts = [], []
    cur = start
    while True:
        v, e = cur
        steps.append(cur)
        if e in tree:
            acts.append(True)
            w = g.other(e, v)
            cur = (w, ribbon.succ(w, e))
        else:
            acts.append(False)
            cur = (v, ribbon.succ(v, e))
        if cur == start:
            break
        if len(steps) > 2 * g.m:
            raise RibbonError("tour does not close up")
    if len(steps) != 2 * g.m:
        raise RibbonError("tour does not visit every incidence")
    return Tour(tuple(steps), tuple(acts))


def t_order(g, ribbon, basis, tree):
    """Rank of each arc by the step at which it is current with its tail."""
    tr = tour(g, ribbon, basis, tree)
    ranks = {}
    for v, e in tr.steps:
        if v == g.tail(e):
            ranks[e] = len(ranks)
    return ranks


def first_seen_at_tail(g, tr):
    seen = {}
    for v, e in tr.steps:
        if e not in seen:
            seen[e] = v == g.tail(e)
    return seen


def is_jaeger(g, ribbon, basis, tree):
    """Every non-tree arc is first current together with its tail."""
    tree = check_spanning_tree(g, tree)
    first = first_seen_at_tail(g, tour(g, ribbon, basis, tree))
    return all(first[e] for e in range(g.m) if e not in tree)


def compare_prec(g, ribbon, basis, t1, t2):
    """-1, 0 or 1 as ``t1`` is smaller than, equal to or larger than ``t2``."""
    basis = check_basis(g, basis)
    t1 = check_spanning_tree(g, t1)
    t2 = check_spanning_tree(g, t2)
    if t1 == t2:
        return 0
    cur = start = (basis.node, basis.arc)
    for _ in range(2 * g.m):
        v, e = cur
        in1, in2 = e in t1, e in t2
        if in1 != in2:
            at_tail = v == g.tail(e)
            # at a tail the tree that drops the arc is smaller, at a head the one keeping it
            t1_smaller = (not in1) if at_tail else in1
            return -1 if t1_smaller else 1
        if in1:
            w = g.other(e, v)
            cur = (w, ribbon.succ(w, e))
        else:
            cur = (v, ribbon.succ(v, e))
        if cur == start:
            break
    raise RibbonError("distinct trees produced identical tours")


class _Search:
    """Depth-first search over tour decisions producing Jaeger trees in order.

    The walk follows the tour of the tree under construction.  An arc is
    decided the first time it becomes current: met at its tail it may be
    skipped or kept (skip first, since that branch is smaller), met at its
    head it must be kept.  Branches that close a cycle or disconnect the
    graph are abandoned.
    """

    def __init__(self, g, ribbon, basis):
        self.g = g
        self.ribbon = ribbon
        self.start = (basis.node, basis.arc)
        self.succ = {}
        for v in range(g.n):
            for e in g.incident(v):
                self.succ[(v, e)] = ribbon.succ(v, e)

    def run(self, prefix=(), depth=None):
        """Return the trees (frozensets) found, in order.

        ``prefix`` fixes the choices (False = skip, True = keep) at the first
        ``len(prefix)`` tail-side branch points.  With ``depth`` set, the
        search stops at that many branch points and reports the choice
        tuples reached there instead of descending further.
        """
        g = self.g
        n, m = g.n, g.m
        arcs = g.arcs
        succ = self.succ
        start = self.start
        decided = [None] * m
        parent = list(range(n))
        kept = []
        out = []

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        def connected_without_skipped():
            seen = [False] * n
            seen[0] = True
            stack = [0]
            cnt = 1
            while stack:
                v = stack.pop()
                for e in g.incident(v):
                    if decided[e] is False:
                        continue
                    w = arcs[e][0] if arcs[e][1] == v else arcs[e][1]
                    if not seen[w]:
                        seen[w] = True
                        cnt += 1
                        stack.append(w)
            return cnt == n

        def advance(cur, choices):
            # follow already decided arcs; None means the tour closed up
            while True:
                if cur == start and decided[start[1]] is not None:
                    if len(kept) == n - 1 and None not in decided:
                        out.append(frozenset(kept))
                    return
                v, e = cur
                d = decided[e]
                if d is None:
                    branch(v, e, choices)
                    return
                if d:
                    w = arcs[e][0] if arcs[e][1] == v else arcs[e][1]
                    cur = (w, succ[(w, e)])
                else:
                    cur = (v, succ[(v, e)])

        def keep_then(v, e, choices):
            t, h = arcs[e]
            a, b = find(t), find(h)
            if a == b:
                return
            parent[a] = b
            decided[e] = True
            kept.append(e)
            w = h if v == t else t
            advance((w, succ[(w, e)]), choices)
            kept.pop()
            decided[e] = None
            parent[a] = a

        def skip_then(v, e, choices):
            decided[e] = False
            if connected_without_skipped():
                advance((v, succ[(v, e)]), choices)
            decided[e] = None

        def branch(v, e, choices):
            if arcs[e][0] != v:
                keep_then(v, e, choices)
                return
            k = len(choices)
            if depth is not None and k == depth:
                out.append(tuple(choices))
                return
            options = (prefix[k],) if k < len(prefix) else (False, True)
            for opt in options:
                if opt:
                    keep_then(v, e, choices + (True,))
                else:
                    skip_then(v, e, choices + (False,))

        advance(start, ())
        return out


def _run_prefix(args):
    g, rotation, basis, prefix = args
    from .ribbon import RibbonStructure as _R, _Search as _S
    return _S(g, _R(g, rotation), basis).run(prefix=prefix)


def enumerate_jaeger_trees(g, ribbon, basis, threads=1, split_depth=6):
    """All Jaeger trees, in increasing tree order.

    With ``threads > 1`` the search tree is cut at ``split_depth`` branch
    points and the subtrees are explored in worker processes; the results
    are concatenated in branch order, so the output does not depend on the
    number of workers.
    """
    basis = check_basis(g, basis)
    if not g.is_connected():
        raise GraphError("graph is not connected")
    if ribbon.graph != g:
        raise RibbonError("ribbon structure belongs to another graph")
    import sys
    limit = sys.getrecursionlimit()
    if limit < 4 * g.m + 100:
        sys.setrecursionlimit(4 * g.m + 100)
    search = _Search(g, ribbon, basis)
    if threads <= 1:
        return search.run()
    parts = search.run(depth=split_depth)
    jobs = [(g, ribbon.rotation, basis, p) for p in parts if isinstance(p, tuple)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = iter(pool.map(_run_prefix, jobs))
        out = []
        for p in parts:
            if isinstance(p, tuple):
                out.extend(next(results))
            else:
                out.append(p)
    return out


def semi_passive_arcs(g, ribbon, basis, tree):
    """Internally semi-passive arcs of a Jaeger tree.

    An arc is semi-passive when its tail lies in the base component of
    ``tree - arc`` and some arc of its fundamental cut has its head there.
    """
    basis = check_basis(g, basis)
    tree = check_spanning_tree(g, tree)
    if not is_jaeger(g, ribbon, basis, tree):
        raise RibbonError("semi-passivity is only computed for Jaeger trees")
    out = set()
    for e in tree:
        cut = fundamental_cut(g, tree, e, base=basis.node)
        if cut.tail_in_base[e] and any(not cut.tail_in_base[f] for f in cut.arcs):
            out.add(e)
    return frozenset(out)


def semi_passive_arcs_by_order(g, ribbon, basis, tree):
    """Semi-passive arcs via the largest arc of each fundamental cut.

    This works for any spanning tree and uses the tree's own T-order.
    """
    basis = check_basis(g, basis)
    order = t_order(g, ribbon, basis, tree)
    out = set()
    for e in tree:
        cut = fundamental_cut(g, tree, e, base=basis.node)
        largest = max(cut.arcs, key=order.__getitem__)
        if cut.opposite(e, largest):
            out.add(e)
    return frozenset(out)


def jaeger_basis_slide(g, ribbon, basis):
    """Move a basis sitting at the head of its arc to the tail side.

    For basis ``(b0, b1b0)`` the result is ``(b1, successor of b1b0 at b1)``;
    both bases have the same Jaeger trees.
    """
    basis = check_basis(g, basis)
    b0, e = basis
    if g.head(e) != b0:
        raise RibbonError("base node must be the head of the base arc")
    b1 = g.tail(e)
    return Basis(b1, ribbon.succ(b1, e))


def jaeger_trees_brute_force(g, ribbon, basis):
    """Filter all spanning trees by the Jaeger condition and sort by the tree order.

    Exponential; intended as a test oracle.
    """
    import functools
    from .digraph import enumerate_spanning_trees
    trees = [t for t in enumerate_spanning_trees(g) if is_jaeger(g, ribbon, basis, t)]
    key = functools.cmp_to_key(lambda a, b: compare_prec(g, ribbon, basis, a, b))
    return sorted(trees, key=key)

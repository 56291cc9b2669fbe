"""Layer-complete directed graphs, their comb-trees and interior polynomial.

Layer ``i`` holds the vertices ``x[i][0..s_i]``.  Consecutive layers are
joined by all possible arcs, oriented upward.  Vertex ``x[i][j]`` is drawn
at ``(j, i)`` and the ribbon structure is read off that (crossing) drawing.
"""

from dataclasses import dataclass
from itertools import product
from math import comb

from .digraph import DirectedGraph, GraphError
from .polynomial import Polynomial
from .ribbon import Basis, RibbonStructure


@dataclass(frozen=True)
class LayerComplete:
    sizes: tuple
    graph: DirectedGraph
    ribbon: RibbonStructure
    basis: Basis
    x: tuple              # x[i][j] -> vertex id
    positions: tuple

    @property
    def graph_arc_index(self):
        return {a: e for e, a in enumerate(self.graph.arcs)}


def check_sizes(sizes):
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) < 2:
        raise GraphError("a layer-complete graph needs at least two layers")
    if any(s < 0 for s in sizes):
        raise GraphError("layer sizes s_i must be nonnegative")
    return sizes


def build_layer_complete(sizes):
    """Graph, ribbon structure and basis of the layer-complete graph.

    ``sizes`` lists ``s_0..s_k``; layer ``i`` has ``s_i + 1`` vertices.
    The basis is ``x[0][0]`` with its arc to ``x[1][s_1]``.
    """
    sizes = check_sizes(sizes)
    x, pos = [], []
    for i, s in enumerate(sizes):
        x.append(tuple(range(len(pos), len(pos) + s + 1)))
        pos.extend((j, i) for j in range(s + 1))
    arcs = []
    for i in range(1, len(sizes)):
        for a in x[i - 1]:
            for b in x[i]:
                arcs.append((a, b))
    g = DirectedGraph(len(pos), arcs)
    ribbon = RibbonStructure.from_positions(g, pos)
    base_arc = arcs.index((x[0][0], x[1][-1]))
    return LayerComplete(sizes, g, ribbon, Basis(x[0][0], base_arc), tuple(x), tuple(pos))


def noncrossing_trees(lower, upper):
    """Non-crossing spanning trees of the complete bipartite graph on two rows.

    ``lower`` and ``upper`` are vertex lists ordered left to right.  Each tree
    is returned as a list of ``(lower_vertex, upper_vertex)`` pairs; these
    trees correspond to monotone lattice paths through the index grid.
    """
    p, q = len(lower), len(upper)
    out = []

    def rec(i, j, path):
        path.append((lower[i], upper[j]))
        if i == p - 1 and j == q - 1:
            out.append(list(path))
        else:
            if i < p - 1:
                rec(i + 1, j, path)
            if j < q - 1:
                rec(i, j + 1, path)
        path.pop()

    rec(0, 0, [])
    return out


@dataclass(frozen=True)
class CombTree:
    down: tuple           # D_i as sorted tuples of vertices
    up: tuple             # U_i
    teeth: tuple          # T_i as frozensets of arc ids, i = 1..k
    arcs: frozenset


def enumerate_comb_trees(sizes):
    """All non-crossing comb-trees of the layer-complete graph."""
    lc = build_layer_complete(sizes)
    index = lc.graph_arc_index
    k = len(lc.sizes) - 1
    middle = [lc.x[i][1:] for i in range(1, k)]
    out = []
    choices = [list(product((False, True), repeat=len(layer))) for layer in middle]
    for pick in product(*choices):
        down = [()]
        up = [tuple(lc.x[0][1:])]
        for layer, flags in zip(middle, pick):
            down.append(tuple(v for v, f in zip(layer, flags) if f))
            up.append(tuple(v for v, f in zip(layer, flags) if not f))
        down.append(tuple(lc.x[k][1:]))
        up.append(())
        per_level = []
        for i in range(1, k + 1):
            lower = [lc.x[i - 1][0], *up[i - 1]]
            upper = [lc.x[i][0], *down[i]]
            per_level.append([frozenset(index[a] for a in t)
                              for t in noncrossing_trees(lower, upper)])
        for teeth in product(*per_level):
            out.append(CombTree(tuple(down), tuple(up), tuple(teeth),
                                frozenset().union(*teeth)))
    return out


def closed_formula(sizes):
    """Nested binomial sum for the interior polynomial of a layer-complete graph."""
    s = check_sizes(sizes)
    k = len(s) - 1
    coeffs = {}
    for idx in product(*(range(s[j] + 1) for j in range(1, k + 1))):
        i = (0,) + idx
        term = 1
        for j in range(1, k):
            term *= comb(s[j], i[j]) * comb(i[j] + s[j - 1] - i[j - 1], i[j])
        term *= comb(s[k], i[k]) * comb(s[k - 1] - i[k - 1], i[k])
        if term:
            deg = sum(idx)
            coeffs[deg] = coeffs.get(deg, 0) + term
    top = max(coeffs, default=0)
    return Polynomial([coeffs.get(d, 0) for d in range(top + 1)])


def layer_specs(max_vertices, max_layers=None):
    """All size tuples with at most ``max_vertices`` vertices in total."""
    out = []

    def rec(prefix, used):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        if max_layers is not None and len(prefix) >= max_layers:
            return
        for s in range(0, max_vertices - used):
            rec(prefix + [s], used + s + 1)

    rec([], 0)
    return out

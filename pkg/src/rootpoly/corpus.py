"""Named example graphs with drawings, ribbon structures and bases.

The drawn graphs keep the vertex numbering of their pictures; positions are
plane coordinates, and unless noted the ribbon structure is the
counterclockwise order of the drawing.
"""

from dataclasses import dataclass, field

from .digraph import DirectedGraph
from .layered import build_layer_complete
from .ribbon import Basis, RibbonStructure


@dataclass(frozen=True)
class Example:
    name: str
    graph: DirectedGraph
    ribbon: RibbonStructure
    basis: Basis
    positions: dict = field(default=None)
    labels: dict = field(default=None)       # arc id -> display name
    note: str = ""


def _drawn(name, n, arcs, pos, basis, labels=None, note=""):
    g = DirectedGraph(n, arcs)
    return Example(name, g, RibbonStructure.from_positions(g, pos), Basis(*basis),
                   pos, labels, note)


def tour_example():
    """Four vertices on a rhombus with one diagonal; the tree {0, 2, 4}."""
    pos = {0: (8, 0), 1: (4, 1.5), 2: (0, 0), 3: (4, -1.5)}
    return _drawn("tour-example", 4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
                  pos, (0, 0), note="tree {0, 2, 4}")


def fig_k23_rooted():
    """p, a, b, c, q = 0..4; arcs pa pb pc aq bq cq."""
    pos = {0: (9, 3), 1: (3, 10), 2: (9, 10), 3: (15, 10), 4: (9, 17)}
    names = {0: "pa", 1: "pb", 2: "pc", 3: "aq", 4: "bq", 5: "cq"}
    return _drawn("shelling-k23", 5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                  pos, (0, 2), names)


def fig_plane_dual():
    """Seven-vertex plane graph used for the arborescence correspondence."""
    pos = {0: (0, 0.8), 1: (3, 2.3), 2: (-3, 2.3), 3: (3, 4.7), 4: (-3, 4.7),
           5: (0, 6.2), 6: (0, 3.6)}
    arcs = [(5, 4), (1, 3), (1, 6), (0, 2), (1, 0), (4, 2), (5, 3), (6, 2), (5, 6)]
    return _drawn("plane-dual", 7, arcs, pos, (2, 3),
                  note="Jaeger tree {3, 4, 5, 6, 7, 8}")


def fig_torus():
    """A ribbon graph of genus one whose Jaeger trees overlap badly.

    Only vertex 2 has degree above two, so its rotation carries all the
    structure.  Arc names follow the drawing.
    """
    arcs = [(1, 0), (1, 2), (3, 2), (4, 2), (5, 2), (5, 6), (3, 0), (4, 6)]
    names = {0: "beta", 1: "zeta", 2: "gamma", 3: "alpha", 4: "5->2",
             5: "delta", 6: "epsilon", 7: "4->6"}
    g = DirectedGraph(7, arcs)
    rot = [list(g.incident(v)) for v in range(7)]
    rot[2] = [2, 4, 1, 3]          # east, north, west, south
    return Example("torus", g, RibbonStructure(g, rot), Basis(6, 7), None, names)


def fig_nontriangulating(basis_arc=5):
    """Seven-vertex graph with the rotation at vertex 0 reversed.

    Basis arc 5 (2->5) gives a dissection that is not a triangulation,
    basis arc 1 (0->5) gives a triangulation.
    """
    pos = {3: (0, 0.9), 1: (3, 2.3), 0: (-3, 2.3), 4: (3, 4.7), 5: (-3, 4.7),
           2: (0, 6.2), 6: (0, 3.6)}
    arcs = [(0, 3), (0, 5), (1, 3), (1, 4), (1, 6), (2, 5), (0, 6), (2, 4), (2, 6)]
    g = DirectedGraph(7, arcs)
    ccw = RibbonStructure.from_positions(g, pos)
    rot = [list(r) for r in ccw.rotation]
    rot[0] = rot[0][::-1]
    return Example(f"twisted-{basis_arc}", g, RibbonStructure(g, rot),
                   Basis(5, basis_arc), pos)


def square():
    pos = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
    return _drawn("square", 4, [(0, 1), (0, 3), (2, 1), (2, 3)], pos, (0, 0))


def hexagon():
    import math
    pos = {i: (math.cos(i * math.pi / 3), math.sin(i * math.pi / 3)) for i in range(6)}
    arcs = [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]
    return _drawn("hexagon", 6, arcs, pos, (0, 0))


def plane_k23():
    pos = {0: (0, 1), 1: (0, -1), 2: (-1, 0), 3: (0, 0), 4: (1, 0)}
    arcs = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    return _drawn("plane-k23", 5, arcs, pos, (0, 0))


def cube():
    """The 3-cube with arcs raising the bit count, drawn as nested squares."""
    outer = {0: (0, 0), 1: (4, 0), 3: (4, 4), 2: (0, 4)}
    inner = {4: (1, 1), 5: (3, 1), 7: (3, 3), 6: (1, 3)}
    pos = {**outer, **inner}
    arcs = []
    for v in range(8):
        for b in range(3):
            if not v >> b & 1:
                arcs.append((v, v | 1 << b))
    return _drawn("cube", 8, arcs, pos, (0, 0))


def path():
    pos = {0: (0, 0), 1: (1, 1), 2: (2, 0), 3: (3, 1)}
    return _drawn("path", 4, [(0, 1), (2, 1), (2, 3)], pos, (0, 0))


def layered(sizes, name=None):
    lc = build_layer_complete(sizes)
    pos = dict(enumerate(lc.positions))
    return Example(name or f"layers{tuple(sizes)}", lc.graph, lc.ribbon, lc.basis, pos)


# known interior polynomials of the layered orientations, as coefficient lists
K23_ORIENTATIONS = {(2, 1): [1, 2], (1, 1, 0): [1, 2], (0, 2, 0): [1, 2, 1]}
K34_ORIENTATIONS = {(2, 3): [1, 6, 3], (1, 3, 0): [1, 6, 9, 4],
                    (2, 2, 0): [1, 6, 6], (1, 2, 1): [1, 6, 7]}


def semi_balanced_corpus():
    """Connected semi-balanced examples used across the test suite."""
    out = [fig_k23_rooted(), fig_plane_dual(), fig_nontriangulating(5), square(),
           hexagon(), plane_k23(), cube(), path()]
    for sizes in list(K23_ORIENTATIONS) + list(K34_ORIENTATIONS):
        out.append(layered(sizes))
    return out

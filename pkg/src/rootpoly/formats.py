"""Plain-text files for graphs, ribbon structures, points and hypertrees.

A graph file holds ``vertices N`` followed by ``arc <id> <tail> <head>``
lines, and may add ``rot <v> <arc ids...>`` lines, a ``basis <v> <arc>``
line, ``pos <v> <x> <y>`` drawing coordinates and a bare ``multi`` line
that permits parallel arcs.  ``map`` lines written beside a dual are
accepted and ignored.  ``#`` starts a comment.
"""

from dataclasses import dataclass
from fractions import Fraction

from .digraph import DirectedGraph, GraphError
from .ribbon import Basis, RibbonStructure, check_basis


class ParseError(ValueError):
    """Malformed input text.  Carries the line number when known."""

    def __init__(self, msg, lineno=None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


@dataclass
class GraphFile:
    graph: DirectedGraph
    rotation: dict = None      # vertex -> list of arc ids
    basis: tuple = None
    positions: dict = None

    def ribbon(self):
        """Rotation lines, else the drawing, else the canonical ribbon."""
        g = self.graph
        if self.rotation:
            missing = [v for v in range(g.n) if v not in self.rotation and g.incident(v)]
            if missing:
                raise GraphError(f"no rot line for vertices {missing}")
            return RibbonStructure(g, [self.rotation.get(v, ()) for v in range(g.n)])
        if self.positions:
            if len(self.positions) != g.n:
                raise GraphError("pos lines must cover every vertex")
            return RibbonStructure.from_positions(g, self.positions)
        return RibbonStructure.canonical(g)

    def basis_or_default(self):
        from .ribbon import default_basis
        if self.basis is None:
            return default_basis(self.graph)
        return check_basis(self.graph, Basis(*self.basis))


def _lines(text):
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def _int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text):
    n = None
    arcs = {}
    rot, basis, pos = {}, None, {}
    multi = False
    for ln, tok in _lines(text):
        kw, args = tok[0], tok[1:]
        if kw == "vertices":
            if n is not None or len(args) != 1:
                raise ParseError("expected a single 'vertices N' line", ln)
            n = _int(args[0], ln)
            if n < 0:
                raise ParseError("vertex count must be nonnegative", ln)
        elif kw == "arc":
            if len(args) != 3:
                raise ParseError("expected 'arc <id> <tail> <head>'", ln)
            e, t, h = (_int(a, ln) for a in args)
            if e in arcs:
                raise ParseError(f"arc id {e} repeated", ln)
            arcs[e] = (t, h, ln)
        elif kw == "rot":
            if not args:
                raise ParseError("expected 'rot <v> <arc ids>'", ln)
            v = _int(args[0], ln)
            if v in rot:
                raise ParseError(f"second rot line for vertex {v}", ln)
            rot[v] = [_int(a, ln) for a in args[1:]]
        elif kw == "basis":
            if len(args) != 2 or basis is not None:
                raise ParseError("expected one 'basis <v> <arc id>' line", ln)
            basis = (_int(args[0], ln), _int(args[1], ln))
        elif kw == "pos":
            if len(args) != 3:
                raise ParseError("expected 'pos <v> <x> <y>'", ln)
            try:
                pos[_int(args[0], ln)] = (float(args[1]), float(args[2]))
            except ValueError:
                raise ParseError("coordinates must be numbers", ln) from None
        elif kw == "multi":
            multi = True
        elif kw == "map":
            # arc correspondence written next to a dual; informational
            if len(args) != 2:
                raise ParseError("expected 'map <arc> <dual arc>'", ln)
            _int(args[0], ln), _int(args[1], ln)
        else:
            raise ParseError(f"unknown keyword {kw!r}", ln)
    if n is None:
        raise ParseError("missing 'vertices N' line")
    if sorted(arcs) != list(range(len(arcs))):
        raise ParseError("arc ids must be 0 .. m-1")
    seen = {}
    for e in sorted(arcs):
        t, h, ln = arcs[e]
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"arc {e} has an endpoint out of range", ln)
        if t == h:
            raise ParseError(f"arc {e} is a loop", ln)
        if not multi and frozenset((t, h)) in seen:
            raise ParseError(f"arc {e} is parallel to arc {seen[frozenset((t, h))]}", ln)
        seen.setdefault(frozenset((t, h)), e)
    g = DirectedGraph(n, [arcs[e][:2] for e in range(len(arcs))], multi=multi)
    for v in list(rot) + list(pos):
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range")
    return GraphFile(g, rot or None, basis, pos or None)


def format_graph(g, ribbon=None, basis=None, comment=None):
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"vertices {g.n}")
    if g.multi:
        out.append("multi")
    out.extend(f"arc {e} {t} {h}" for e, (t, h) in enumerate(g.arcs))
    if ribbon is not None:
        for v, r in enumerate(ribbon.rotation):
            if r:
                out.append(" ".join(["rot", str(v)] + [str(e) for e in r]))
    if basis is not None:
        out.append(f"basis {basis[0]} {basis[1]}")
    return "\n".join(out) + "\n"


def parse_point(text, n):
    p = [Fraction(0)] * n
    given = set()
    for ln, tok in _lines(text):
        if tok[0] != "coord" or len(tok) != 3:
            raise ParseError("expected 'coord <vertex> <num>/<den>'", ln)
        v = _int(tok[1], ln)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", ln)
        if v in given:
            raise ParseError(f"vertex {v} given twice", ln)
        try:
            p[v] = Fraction(tok[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {tok[2]!r}", ln) from None
        given.add(v)
    return tuple(p)


def format_point(p):
    return "".join(f"coord {v} {x.numerator}/{x.denominator}\n"
                   for v, x in enumerate(p) if x != 0)


def parse_hypertree(text):
    vals = {}
    for ln, tok in _lines(text):
        if tok[0] != "ht" or len(tok) != 3:
            raise ParseError("expected 'ht <vertex> <value>'", ln)
        v = _int(tok[1], ln)
        if v in vals:
            raise ParseError(f"vertex {v} given twice", ln)
        vals[v] = _int(tok[2], ln)
    return vals


def format_dual(d):
    text = format_graph(d.graph, d.ribbon, comment="dual graph; vertex i is face i")
    return text + "".join(f"map {e} {e}\n" for e in range(d.graph.m))

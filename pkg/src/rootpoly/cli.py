"""Command-line entry point: ``rootpoly <command> ...``."""

import argparse
import json
import random
import sys

from . import formats
from .digraph import GraphError, enumerate_cycles, semi_balanced_layering
from .formats import ParseError


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load(path):
    return formats.parse_graph(_read(path))


def _frac(x):
    return str(x) if x.denominator != 1 else str(x.numerator)


def _tree(t):
    return sorted(t)


# commands return (exit code, payload for --json, lines for humans)

def cmd_check(args):
    from .geometry import polytope_dimension
    gf = _load(args.graph)
    g = gf.graph
    layer = semi_balanced_layering(g)
    info = {"vertices": g.n, "arcs": g.m, "connected": g.is_connected(),
            "semi_balanced": layer is not None,
            "layering": list(layer) if layer is not None else None,
            "dimension": polytope_dimension(g)}
    lines = [f"vertices: {g.n}", f"arcs: {g.m}",
             f"connected: {str(info['connected']).lower()}"]
    if layer is None:
        lines.append("not semi-balanced")
    else:
        lines.append("semi-balanced, layering " + " ".join(map(str, layer)))
    lines.append(f"root polytope dimension: {info['dimension']}")
    if gf.rotation or gf.positions:
        from .planar import is_plane
        info["plane"] = is_plane(g, gf.ribbon()) if g.is_connected() else None
        lines.append(f"plane ribbon structure: {str(info['plane']).lower()}")
    return (0 if layer is not None else 1), info, lines


def cmd_jaeger(args):
    from .invariants import jaeger_statistics
    gf = _load(args.graph)
    stats = jaeger_statistics(gf.graph, gf.ribbon(), gf.basis_or_default(), args.threads)
    data = [{"tree": _tree(t), "semi_passive": r} for t, r in stats]
    lines = [f"{i:4d}  r={r}  " + " ".join(map(str, _tree(t)))
             for i, (t, r) in enumerate(stats)]
    lines.append(f"{len(stats)} Jaeger trees")
    return 0, {"trees": data}, lines


def cmd_interior(args):
    from .invariants import interior_disconnected
    g = _load(args.graph).graph
    poly = interior_disconnected(g, args.threads)
    return 0, {"coefficients": poly.to_list()}, [str(poly.to_list())]


def cmd_ehrhart(args):
    from .invariants import ehrhart_table, h_star_from_ehrhart
    g = _load(args.graph).graph
    if semi_balanced_layering(g) is None:
        raise GraphError("graph is not semi-balanced")
    kmax = args.kmax if args.kmax is not None else max(g.n - 1, 1)
    counts = ehrhart_table(g, kmax, args.backend)
    h = h_star_from_ehrhart(g, args.backend)
    lines = [f"k={k}: {c}" for k, c in enumerate(counts)]
    lines.append(f"h*: {h.to_list()}")
    return 0, {"counts": counts, "h_star": h.to_list()}, lines


def cmd_triangulation(args):
    from .triangulation import is_triangulation
    gf = _load(args.graph)
    ok, w = is_triangulation(gf.graph, gf.ribbon(), gf.basis_or_default())
    if ok:
        return 0, {"triangulation": True}, ["triangulation: true"]
    c = w.cycle
    data = {"triangulation": False, "tree1": _tree(w.tree1), "tree2": _tree(w.tree2),
            "cycle_vertices": list(c.vertices), "plus": sorted(c.plus),
            "minus": sorted(c.minus)}
    lines = ["triangulation: false",
             "trees: " + " ".join(map(str, data["tree1"])) + " | "
             + " ".join(map(str, data["tree2"])),
             "cycle vertices: " + " ".join(map(str, c.vertices)),
             "plus arcs: " + " ".join(map(str, data["plus"])),
             "minus arcs: " + " ".join(map(str, data["minus"]))]
    return 0, data, lines


def cmd_locate(args):
    from .geometry import barycentric_in_tree, random_point_in_tree
    from .digraph import enumerate_spanning_trees
    from .locate import jaeger_tree_for_point
    gf = _load(args.graph)
    g, ribbon, basis = gf.graph, gf.ribbon(), gf.basis_or_default()
    if args.point:
        points = [formats.parse_point(_read(args.point), g.n)]
    else:
        rng = random.Random(args.seed)
        trees = list(enumerate_spanning_trees(g))
        points = [random_point_in_tree(g, rng.choice(trees), rng)
                  for _ in range(args.random)]
    out, lines = [], []
    for p in points:
        t = jaeger_tree_for_point(g, ribbon, basis, p)
        cert = barycentric_in_tree(g, t, p)
        coeffs = {e: _frac(x) for e, x in sorted(cert.coefficients.items())}
        out.append({"point": [_frac(x) for x in p], "tree": _tree(t),
                    "coefficients": coeffs})
        lines.append("point " + " ".join(_frac(x) for x in p))
        lines.append("  tree " + " ".join(map(str, _tree(t))))
        lines.append("  " + " ".join(f"{e}:{c}" for e, c in coeffs.items()))
    return 0, {"results": out}, lines


def cmd_bernardi(args):
    from .locate import bernardi, hypertree_of_tree, make_hypertree
    gf = _load(args.graph)
    g = gf.graph
    h = make_hypertree(g, args.side, formats.parse_hypertree(_read(args.hypertree)))
    t = bernardi(g, gf.ribbon(), gf.basis_or_default(), h, cut=args.cut)
    realized = hypertree_of_tree(g, t, args.side) == h
    return 0, {"tree": _tree(t), "realizes": realized}, [
        "tree " + " ".join(map(str, _tree(t))), f"realizes hypertree: {str(realized).lower()}"]


def cmd_dual(args):
    from .planar import dual
    gf = _load(args.graph)
    d = dual(gf.graph, gf.ribbon())
    text = formats.format_dual(d)
    data = {"vertices": d.graph.n, "arcs": [list(a) for a in d.graph.arcs],
            "rotation": [list(r) for r in d.ribbon.rotation],
            "map": {e: e for e in range(d.graph.m)}}
    return 0, data, text.rstrip("\n").split("\n")


def cmd_greedoid(args):
    from .planar import greedoid_polynomial
    gf = _load(args.graph)
    g, ribbon = gf.graph, gf.ribbon()
    roots = range(g.n) if args.root is None else [args.root]
    data, lines = {}, []
    for r in roots:
        a = greedoid_polynomial(g, ribbon, r, route="dual")
        b = greedoid_polynomial(g, ribbon, r, route="complex")
        if a != b:
            raise ArithmeticError(f"routes disagree at root {r}: {a} vs {b}")
        data[r] = a.to_list()
        lines.append(f"root {r}: {a.format('t')}")
    return 0, {"lambda": data}, lines


def _sizes(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"bad --sizes {text!r}; expected e.g. 1,2,1") from None


def cmd_layer_complete(args):
    from .layered import build_layer_complete, closed_formula, enumerate_comb_trees
    sizes = _sizes(args.sizes)
    lc = build_layer_complete(sizes)
    if args.emit == "graph":
        text = formats.format_graph(lc.graph, lc.ribbon, lc.basis)
        return 0, {"graph": text}, text.rstrip("\n").split("\n")
    if args.emit == "formula":
        p = closed_formula(sizes)
        return 0, {"coefficients": p.to_list()}, [str(p.to_list())]
    trees = enumerate_comb_trees(sizes)
    return 0, {"trees": [_tree(t.arcs) for t in trees]}, [
        " ".join(map(str, _tree(t.arcs))) for t in trees] + [f"{len(trees)} comb-trees"]


def _glue(text):
    parts = text.split(":")
    if len(parts) != 3 or parts[0] not in ("vertex", "edge"):
        raise ParseError(f"bad --glue {text!r}; use vertex:V1:V2 or edge:E1:E2")
    try:
        return (parts[0], int(parts[1]), int(parts[2]))
    except ValueError:
        raise ParseError(f"bad --glue {text!r}") from None


def cmd_verify(args):
    from . import invariants as inv
    if args.identity == "product":
        g1, g2 = _load(args.graphs[0]).graph, _load(args.graphs[1]).graph
        if args.glue:
            glue = _glue(args.glue)
        else:
            rng = random.Random(args.seed)
            if rng.random() < 0.5 and g1.m and g2.m:
                glue = ("edge", rng.randrange(g1.m), rng.randrange(g2.m))
            else:
                glue = ("vertex", rng.randrange(g1.n), rng.randrange(g2.n))
        ok, lhs, rhs = inv.verify_product(g1, g2, glue, args.threads)
        data = {"glue": list(glue), "holds": ok, "fused": lhs.to_list(), "product": rhs.to_list()}
        lines = [f"glue {glue[0]} {glue[1]} {glue[2]}", f"fused: {lhs.to_list()}",
                 f"product: {rhs.to_list()}", f"holds: {str(ok).lower()}"]
    elif args.identity == "bridge":
        g = _load(args.graphs[0]).graph
        ok, lhs, rhs = inv.verify_bridge(g, args.arc, args.threads)
        data = {"holds": ok, "deleted": lhs.to_list(), "expected": rhs.to_list()}
        lines = [f"I(G - e): {lhs.to_list()}", f"(1 - t) I(G): {rhs.to_list()}",
                 f"holds: {str(ok).lower()}"]
    elif args.identity == "disjoint":
        g1, g2 = _load(args.graphs[0]).graph, _load(args.graphs[1]).graph
        ok, lhs, rhs = inv.verify_disjoint(g1, g2, args.backend, args.threads)
        data = {"holds": ok, "union": lhs.to_list(), "expected": rhs.to_list()}
        lines = [f"union (lattice points): {lhs.to_list()}",
                 f"(1 - t) I(G1) I(G2): {rhs.to_list()}", f"holds: {str(ok).lower()}"]
    else:
        g = _load(args.graphs[0]).graph
        cycles = enumerate_cycles(g)
        if args.cycle is not None:
            if not 0 <= args.cycle < len(cycles):
                raise GraphError(f"cycle index out of range (graph has {len(cycles)})")
            cycles = [cycles[args.cycle]]
        rows, ok = [], True
        for c in cycles:
            zero, total = inv.verify_recursion(g, c, args.threads)
            ok = ok and zero
            rows.append({"arcs": list(c.arcs), "plus": sorted(c.plus), "zero": zero,
                         "sum": total.to_list()})
        data = {"holds": ok, "cycles": rows}
        lines = [f"cycle {' '.join(map(str, r['arcs']))}: sum {r['sum']}" for r in rows]
        lines.append(f"zero polynomial: {str(ok).lower()}")
    return (0 if data["holds"] else 1), data, lines


def build_parser():
    p = argparse.ArgumentParser(prog="rootpoly",
                                description="Root polytopes, Jaeger trees and interior polynomials.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for random choices")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, graph=True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if graph:
            sp.add_argument("graph", help="graph file, or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    add("check", cmd_check, "basic properties of a graph")
    add("jaeger", cmd_jaeger, "Jaeger trees in tree order")
    add("interior", cmd_interior, "interior polynomial coefficients")
    sp = add("ehrhart", cmd_ehrhart, "lattice-point counts and h*")
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--backend", choices=["box", "sums"], default="box")
    add("triangulation", cmd_triangulation, "do the Jaeger trees triangulate?")
    sp = add("locate", cmd_locate, "Jaeger tree containing a point")
    sp.add_argument("--point", help="point file with coord lines")
    sp.add_argument("--random", type=int, default=1, help="random points if no --point")
    sp = add("bernardi", cmd_bernardi, "Bernardi process for a hypertree")
    sp.add_argument("hypertree", help="hypertree file with ht lines")
    sp.add_argument("--side", choices=["U", "W"], default="U")
    sp.add_argument("--cut", choices=["U", "W"], default="U")
    add("dual", cmd_dual, "directed dual of a plane graph")
    sp = add("greedoid", cmd_greedoid, "greedoid polynomial of an Eulerian plane graph")
    sp.add_argument("--root", type=int)
    sp = add("layer-complete", cmd_layer_complete, "layer-complete graphs", graph=False)
    sp.add_argument("--sizes", required=True, help="comma-separated s_0,...,s_k")
    sp.add_argument("--emit", choices=["graph", "formula", "trees"], default="graph")
    sp = add("verify", cmd_verify, "check an identity", graph=False)
    sp.add_argument("identity", choices=["product", "bridge", "disjoint", "recursion"])
    sp.add_argument("graphs", nargs="+")
    sp.add_argument("--glue", help="vertex:V1:V2 or edge:E1:E2")
    sp.add_argument("--arc", type=int, help="bridge arc id")
    sp.add_argument("--cycle", type=int, help="index of a single cycle")
    sp.add_argument("--backend", choices=["box", "sums"], default="sums")
    return p


_ARITY = {"product": 2, "disjoint": 2, "bridge": 1, "recursion": 1}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if len(args.graphs) != _ARITY[args.identity]:
            parser.error(f"verify {args.identity} takes {_ARITY[args.identity]} graph file(s)")
        if args.identity == "bridge" and args.arc is None:
            parser.error("verify bridge needs --arc")
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        code, data, lines = args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

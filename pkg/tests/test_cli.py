import json

import pytest

from rootpoly.cli import main
from rootpoly.corpus import fig_k23_rooted, fig_plane_dual, layered, path, plane_k23, square
from rootpoly.formats import format_graph, parse_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def graph_file(write, ex, name="g.txt"):
    return write(name, format_graph(ex.graph, ex.ribbon, ex.basis))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys, write):
    code, out, _ = run(capsys, "check", graph_file(write, square()))
    assert code == 0 and "semi-balanced, layering" in out and "plane ribbon structure: true" in out
    cyc = write("c.txt", "vertices 4\narc 0 0 1\narc 1 1 2\narc 2 2 3\narc 3 3 0\n")
    code, out, _ = run(capsys, "check", cyc)
    assert code == 1 and "not semi-balanced" in out
    code, out, _ = run(capsys, "check", "--json", cyc)
    assert json.loads(out)["semi_balanced"] is False


def test_interior_and_ehrhart(capsys, write):
    f = graph_file(write, layered((0, 2, 0)))
    assert run(capsys, "interior", f)[1].strip() == "[1, 2, 1]"
    code, out, _ = run(capsys, "ehrhart", "--json", "--backend", "sums", f)
    assert code == 0 and json.loads(out)["h_star"] == [1, 2, 1]
    cyc = write("c.txt", "vertices 3\narc 0 0 1\narc 1 1 2\narc 2 2 0\n")
    assert run(capsys, "ehrhart", cyc)[0] == 1


def test_jaeger_is_deterministic_across_threads(capsys, write):
    f = graph_file(write, fig_k23_rooted())
    one = run(capsys, "jaeger", "--json", f)[1]
    two = run(capsys, "jaeger", "--json", "--threads", "2", f)[1]
    assert one == two
    data = json.loads(one)["trees"]
    assert len(data) == 4 and sorted(d["semi_passive"] for d in data) == [0, 1, 1, 2]


def test_triangulation(capsys, write):
    code, out, _ = run(capsys, "triangulation", graph_file(write, plane_k23()))
    assert code == 0 and out.strip() == "triangulation: true"


def test_locate(capsys, write):
    f = graph_file(write, square())
    p = write("p.txt", "coord 0 -1\ncoord 1 1/2\ncoord 3 1/2\n")
    code, out, _ = run(capsys, "locate", "--json", f, "--point", p)
    res = json.loads(out)["results"][0]
    assert code == 0 and {0, 1} <= set(res["tree"])
    assert res["coefficients"]["0"] == res["coefficients"]["1"] == "1/2"
    a = run(capsys, "locate", f, "--random", "3", "--seed", "7")[1]
    b = run(capsys, "locate", f, "--random", "3", "--seed", "7")[1]
    assert a == b and a.count("tree") == 3
    bad = write("q.txt", "coord 0 -1/2\ncoord 1 1/2\n")
    assert run(capsys, "locate", f, "--point", bad)[0] == 1


def test_bernardi(capsys, write):
    f = graph_file(write, plane_k23())
    h = write("h.txt", "ht 0 2\nht 1 0\n")
    code, out, _ = run(capsys, "bernardi", f, h)
    assert code == 0 and "realizes hypertree: true" in out
    assert run(capsys, "bernardi", f, write("x.txt", "ht 0 3\nht 1 0\n"))[0] == 1


def test_dual_output_parses(capsys, write):
    ex = fig_plane_dual()
    code, out, _ = run(capsys, "dual", graph_file(write, ex))
    assert code == 0
    d = parse_graph(out)
    assert d.graph.m == ex.graph.m and d.graph.n == 4 and d.graph.multi
    assert run(capsys, "dual", graph_file(write, path()))[0] == 1


def test_greedoid(capsys, write):
    tri = write("t.txt", "vertices 3\narc 0 0 1\narc 1 1 2\narc 2 2 0\n"
                         "pos 0 0 0\npos 1 1 0\npos 2 0 1\n")
    code, out, _ = run(capsys, "greedoid", "--json", tri)
    assert code == 0 and json.loads(out)["lambda"] == {"0": [0, 1], "1": [0, 1], "2": [0, 1]}


def test_layer_complete(capsys):
    assert run(capsys, "layer-complete", "--sizes", "1,2,1", "--emit", "formula")[1].strip() == "[1, 6, 7]"
    out = run(capsys, "layer-complete", "--sizes", "1,2,1", "--emit", "trees")[1]
    assert out.strip().endswith("14 comb-trees")
    g = parse_graph(run(capsys, "layer-complete", "--sizes", "1,2,1")[1])
    assert (g.graph.n, g.graph.m) == (7, 12) and g.basis is not None
    assert run(capsys, "layer-complete", "--sizes", "1,x")[0] == 2
    assert run(capsys, "layer-complete", "--sizes", "3")[0] == 1


def test_verify(capsys, write):
    sq, k = graph_file(write, square(), "a.txt"), graph_file(write, plane_k23(), "b.txt")
    code, out, _ = run(capsys, "verify", "product", sq, k, "--glue", "edge:0:1")
    assert code == 0 and "holds: true" in out
    code, out, _ = run(capsys, "verify", "product", sq, k, "--seed", "3")
    assert code == 0 and "holds: true" in out
    assert run(capsys, "verify", "bridge", graph_file(write, path(), "p.txt"), "--arc", "0")[0] == 0
    assert run(capsys, "verify", "disjoint", sq, k)[0] == 0
    code, out, _ = run(capsys, "verify", "recursion", sq)
    assert code == 0 and out.strip().endswith("zero polynomial: true")
    assert run(capsys, "verify", "recursion", sq, "--cycle", "99")[0] == 1
    assert run(capsys, "verify", "product", sq, k, "--glue", "face:0:0")[0] == 2


def test_usage_errors(capsys, write, tmp_path):
    assert run(capsys, "check", str(tmp_path / "missing.txt"))[0] == 2
    par = write("m.txt", "vertices 2\narc 0 0 1\narc 1 0 1\n")
    code, _, err = run(capsys, "check", par)
    assert code == 2 and "parallel" in err
    for argv in (["nope"], ["verify", "bridge", par], ["verify", "product", par],
                 ["check", "--threads", "0", par]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()

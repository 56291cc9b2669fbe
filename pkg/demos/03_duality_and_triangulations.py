# %% [markdown]
# Plane duals, greedoid polynomials and triangulations
#
# For a plane digraph the complements of Jaeger trees are the spanning
# arborescences of the dual.  When the ribbon structure is not planar, the
# Jaeger simplices may fail to meet face to face.

# %%
from rootpoly.corpus import fig_nontriangulating, fig_plane_dual
from rootpoly.layered import build_layer_complete, closed_formula, enumerate_comb_trees
from rootpoly.planar import dual, enumerate_arborescences, greedoid_polynomial, root_from_basis, tree_dual
from rootpoly.ribbon import enumerate_jaeger_trees
from rootpoly.triangulation import is_triangulation

ex = fig_plane_dual()
g, rb, b = ex.graph, ex.ribbon, ex.basis
d = dual(g, rb)
print("dual has", d.graph.n, "vertices and arcs", d.graph.arcs)

# %%
r0 = root_from_basis(g, rb, b, d)
comps = sorted(sorted(tree_dual(g, t)) for t in enumerate_jaeger_trees(g, rb, b))
arbs = sorted(sorted(a) for a in enumerate_arborescences(d.graph, r0))
print(len(comps), "Jaeger trees;", "complements are the arborescences" if comps == arbs else "MISMATCH")

# %% [markdown]
# The dual is Eulerian, so its greedoid polynomial is defined, and it does
# not depend on the root.  Both routes are computed.

# %%
for r in range(d.graph.n):
    a = greedoid_polynomial(d.graph, d.ribbon, r, "dual")
    c = greedoid_polynomial(d.graph, d.ribbon, r, "complex")
    print("root", r, a.format("t") + ("" if a == c else "  ROUTES DISAGREE"))

# %% [markdown]
# Reversing the rotation at one vertex breaks planarity.  With one basis
# the dissection is still a triangulation, with another it is not, and the
# checker hands back a cycle that two of the simplices disagree on.

# %%
for arc in (1, 5):
    bad = fig_nontriangulating(arc)
    ok, w = is_triangulation(bad.graph, bad.ribbon, bad.basis)
    print("basis arc", arc, "triangulation" if ok else f"witness cycle on {sorted(w.cycle.vertices)}")

# %% [markdown]
# Layer-complete graphs: the Jaeger trees are the non-crossing comb-trees,
# and the interior polynomial has a closed form.

# %%
for sizes in [(1, 2), (2, 3), (1, 2, 1), (2, 2, 0)]:
    lc = build_layer_complete(sizes)
    print(sizes, len(enumerate_comb_trees(sizes)), "comb-trees,", closed_formula(sizes).format("x"))

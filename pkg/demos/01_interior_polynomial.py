# %% [markdown]
# Interior polynomials from Jaeger trees
#
# Every connected semi-balanced digraph has a root polytope, the convex hull
# of the vectors head minus tail.  Fix a rotation at each vertex and a
# starting (vertex, arc) pair.  The Jaeger trees then cut the polytope into
# unimodular simplices, and counting semi-passive arcs per tree gives the
# h*-vector.  This script walks through that on small graphs.

# %%
from rootpoly import DirectedGraph, semi_balanced_layering
from rootpoly.corpus import K23_ORIENTATIONS, K34_ORIENTATIONS, fig_k23_rooted, layered
from rootpoly.invariants import ehrhart_table, h_star_from_ehrhart, interior_polynomial, jaeger_statistics

# %% [markdown]
# A four-cycle with alternating arcs is semi-balanced.  A directed cycle
# is not, because no potential can rise by one all the way around.

# %%
square = DirectedGraph(4, [(0, 1), (0, 3), (2, 1), (2, 3)])
print("square layering:", semi_balanced_layering(square))
print("directed triangle layering:", semi_balanced_layering(DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])))

# %% [markdown]
# Jaeger trees in tree order, with the number of semi-passive arcs.  The
# first tree always has none.

# %%
ex = fig_k23_rooted()
for tree, r in jaeger_statistics(ex.graph, ex.ribbon, ex.basis):
    names = sorted(ex.labels[e] for e in tree)
    print(f"r={r}", " ".join(names))

# %% [markdown]
# Summing x^r over those trees gives the interior polynomial.  Layered
# orientations of K_{2,3} and K_{3,4} are indexed by how many vertices sit on
# each potential level.

# %%
for table in (K23_ORIENTATIONS, K34_ORIENTATIONS):
    for sizes, want in table.items():
        got = interior_polynomial(layered(sizes).graph)
        print(sizes, got.format("x"), "ok" if got == want else "MISMATCH")

# %% [markdown]
# The same numbers fall out of lattice point counts.  The box backend
# scans integer points directly, so it does not lean on the tree statistic.

# %%
g = layered((0, 2, 0)).graph
print("Ehrhart counts:", ehrhart_table(g, 4, "box"))
print("h* from counts:", h_star_from_ehrhart(g, "box").to_list())

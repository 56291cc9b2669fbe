# %% [markdown]
# Locating points in the Jaeger dissection
#
# Given a rational point of the root polytope, we walk through tree space
# until we reach the Jaeger tree whose simplex contains it.  The answer is
# checked against a brute-force search over all spanning trees.

# %%
import random
from fractions import Fraction

from rootpoly.corpus import fig_k23_rooted, plane_k23
from rootpoly.geometry import barycentric_in_tree, combination
from rootpoly.locate import (bernardi, enumerate_hypertrees, jaeger_tree_for_point, marker,
                             minimal_tree_containing)

rng = random.Random(1)
ex = fig_k23_rooted()
g, rb, b = ex.graph, ex.ribbon, ex.basis

# %%
for _ in range(5):
    w = [rng.randint(1, 6) for _ in range(g.m)]
    p = combination(g, {e: Fraction(x, sum(w)) for e, x in enumerate(w)})
    t = jaeger_tree_for_point(g, rb, b, p)
    cert = barycentric_in_tree(g, t, p)
    brute = minimal_tree_containing(g, rb, b, p)
    print(sorted(ex.labels[e] for e in t), "certified" if cert.valid_for(g, p) else "??",
          "matches brute force" if t == brute else "DIFFERS")

# %% [markdown]
# Hypertrees of a bipartite graph with all arcs from U to W.  The marker
# point of a hypertree lies inside exactly the simplices of trees that
# realize it, so locating the marker is one way to run Bernardi's bijection.

# %%
k = plane_k23()
for h in enumerate_hypertrees(k.graph, "U"):
    t = bernardi(k.graph, k.ribbon, k.basis, h)
    same = t == jaeger_tree_for_point(k.graph, k.ribbon, k.basis, marker(k.graph, h))
    print(dict(h.values), "->", sorted(t), "(agrees with marker location)" if same else "")

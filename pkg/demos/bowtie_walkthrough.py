"""
The bowtie: two triangles glued at a vertex
===========================================

A small complex that is connected but not Cohen-Macaulay.  We look at its
links, compute depth, and then ask for which ell and j it satisfies
(S_ell^j).
"""
from serre_sr import (alexander_dual_ideal, depth, face, from_facets, graded_betti, link,
                      s2j_dual_graph, serre_profile, slj_alexander, slj_definition,
                      stanley_reisner_ideal)
from serre_sr.complex import format_facets, members

# two triangles sharing vertex 2
bowtie = from_facets([[0, 1, 2], [2, 3, 4]], 5)
print(format_facets(bowtie))
print("dim", bowtie.dim, "krull dim", bowtie.krull_dim)

# The link of the shared vertex is two disjoint edges, which is disconnected.
lk = link(bowtie, face([2]))
print("link of 2:", format_facets(lk).strip().replace("\n", " | "))

# Depth over GF(2) is 2, one less than the Krull dimension.
print("depth", depth(bowtie, 2))

# (S_2^0) fails and the vertex 2 is the witness.  Allowing j = 1 forgives it.
for j in (0, 1):
    v = slj_definition(bowtie, 2, j, 2)
    print(f"(S_2^{j})", v.status(), "witness", v.witness and members(v.witness[1]))

# The facet graph view gives the same answer without computing homology.
print("dual graph, j=0:", s2j_dual_graph(bowtie, 0).status())
print("dual graph, j=1:", s2j_dual_graph(bowtie, 1).status())

# So does Tor vanishing for the Alexander dual ideal.
dual = alexander_dual_ideal(stanley_reisner_ideal(bowtie))
print("dual Betti rows (i, degree, count):", graded_betti(dual, 2).rows())
print("Tor witness:", slj_alexander(bowtie, 2, 0, 2).witness)

# %%
# The whole grid at once.
print(serre_profile(bowtie, 2).format_grid())

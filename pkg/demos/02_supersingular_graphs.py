"""Building supersingular ell-isogeny graphs from curve arithmetic.

Vertices are isomorphism classes of supersingular elliptic curves over
F_{p^2}; edges are kernels of degree-ell isogenies up to automorphism.
The dual map sends an edge to the edge of its dual kernel, which is in
general neither injective nor an involution.

Run:  python demos/02_supersingular_graphs.py
"""

from isozeta import (
    build_isogeny_graph,
    cycle_count_series,
    ihara_zeta,
    supersingular_j_invariants,
)

# Characteristic 13: a single supersingular class (j = 5), three
# 2-isogeny kernels, one of them self-dual.
print("supersingular j-invariants mod 13:", supersingular_j_invariants(13))

res = build_isogeny_graph(13, 2, "full:1")
g = res.graph
print("vertices:", res.num_vertices, "| edges:", g.num_edges)
print("dual map:", g.dual, " (one fixed edge -> one self-dual kernel)")
print("walk counts:", cycle_count_series(ihara_zeta(g), 5))

# The provenance of every edge is retained: which curve, which kernel.
for ei, (vi, ki) in enumerate(res.edge_owner):
    k = res.curves[res.vertices[vi].curve_index].kernels[ki]
    print(f"  edge {ei}: kernel polynomial {list(k.phi.kernel_polynomial)}")

# Characteristic 11 with ell = 3: two classes (j = 0 and j = 1728), both
# with extra automorphisms.  The adjacency matrix is NOT symmetric, and
# the dual map is not injective: three parallel edges share one dual.
res11 = build_isogeny_graph(11, 3, "full:1")
print("\ncharacteristic 11, ell = 3")
print("adjacency:", res11.adjacency())
print("dual map: ", res11.graph.dual)
z = ihara_zeta(res11.graph)
num, den = z.expand()
import isozeta.intpoly as ip

print("zeta =", z)
print("    = (", ip.to_str(num), ") / (", ip.to_str(den), ")")

"""Level structure: graphs whose diamond map is nontrivial.

Adding a basis of the N-torsion up to a subgroup H of GL2(Z/N) refines
the vertices.  When the scalar ell does not lie in +-H, the dual map J is
not an involution and the diamond map L permutes vertices in cycles of
length m = [<ell I> : <ell I> meet +-H]; all J-cycles then have length 2m.

Run:  python demos/03_level_structure.py
"""

from isozeta import (
    FactoredRationalFunction,
    LevelSubgroup,
    associated_permutation,
    build_isogeny_graph,
    cycle_count_series,
    diamond_order,
    ihara_zeta,
    zeta_numerator,
)
import isozeta.intpoly as ip

H = LevelSubgroup.borel1(5)
print("|H| =", len(H.elements), "| -I in H:", H.contains_minus_identity)
print("diamond order m =", diamond_order(3, H))

# 3-isogenies in characteristic 13 with this level-5 structure: the
# 5-torsion lives over F_{13^8}, and the graph has 12 vertices.
res = build_isogeny_graph(13, 3, H)
g = res.graph
print("vertices:", res.num_vertices, "| edges:", g.num_edges)
print("diamond cycles:", associated_permutation(g.diamond).cycles)
print("dual cycles:   ", associated_permutation(g.dual).cycles)

z = ihara_zeta(g)
print("walk counts:", cycle_count_series(z, 5))

# The product of the graph zeta with the weight-2 modular data of the
# matching modular curves collapses to the cycle-data numerator.  The
# degree-22 polynomial below is the numerator of the Hasse-Weil zeta
# function of the level-65 modular curve over F_3 (an external input).
f = ip.mul(
    ip.mul((1, 2, 3), (1, -2, 4, -6, 9)),
    ip.mul((1, 0, 4, 0, 9), (1, 0, -6, 0, 11, 0, -8, 0, 99, 0, -486, 0, 729)),
)
lhs = FactoredRationalFunction(
    list(z.factors) + [(f, 1), ((1, -1), 1), ((1, -3), 1)]
)
rhs = zeta_numerator(g)
print("product formula holds:", lhs.equals(rhs))
print("predicted numerator:", rhs, " (i.e. (1 - u^4)^-6)")

"""Graphs with a dual map, and what their zeta function counts.

A graph here is four pieces of data: directed edges with source/target,
a dual map J on edges, and a diamond map L on vertices, subject to
s(Jy) = t(y) and t(Jy) = L(s(y)).  When J is a fixed-point-free
involution and L is the identity this is an ordinary (Serre-style) graph;
isogeny graphs are usually *not* of that kind, which is the whole point.

Run:  python demos/01_graphs_and_zeta.py
"""

from isozeta import (
    IsogenyGraph,
    count_closed_walks,
    cycle_count_series,
    enumerate_primes,
    euler_characteristic,
    hashimoto_series,
    homotopy_rank,
    ihara_zeta,
    oriented_graphs,
    quotients,
    validate,
)

# One vertex carrying three loops.  The dual map swaps the first two and
# fixes the third -- exactly the shape of the 2-isogeny graph in
# characteristic 13, where one endomorphism has a self-dual kernel.
g = IsogenyGraph(
    num_vertices=1,
    edges=((0, 0), (0, 0), (0, 0)),
    dual=(1, 0, 2),
    diamond=(0,),
)

report = validate(g)
print("axioms hold:", report.ok, "| regular of degree", report.regular_degree)

# The zeta function is an Euler product over primes (rotation classes of
# primitive non-backtracking tailless cycles).  The determinant formula
# turns it into a rational function; here it is, factored.
z = ihara_zeta(g)
print("zeta =", z)

# Its logarithmic derivative counts closed non-backtracking tailless
# walks.  Three independent routes must agree: the determinant formula,
# traces of the non-backtracking edge operator, and brute-force DFS.
print("series from zeta:      ", cycle_count_series(z, 6))
print("series from edge op:   ", hashimoto_series(g, 6))
print("series by enumeration: ", [count_closed_walks(g, r) for r in range(1, 7)])

# The walk of length 1 around the self-dual loop has a "tail" (its first
# edge is the dual of its last), so only two walks of length 1 count.

# Primes by length, with the divisor-sum identity N_r = sum d * c_d.
by_len, c = enumerate_primes(g, 6)
print("primes per length:", c)

# Quotienting by y ~ J^2 y and x ~ L x gives two honest graphs: the plus
# graph deletes self-dual edge classes, the minus graph doubles them.
q = quotients(g)
plus, minus = oriented_graphs(g)
print(
    "edge classes:", q.num_edge_classes,
    "| self-dual:", len(q.self_dual_classes),
    "| chi(plus) =", euler_characteristic(plus),
    "| chi(minus) =", euler_characteristic(minus),
)

# The pole of zeta at u = 1 has order 1 - chi(plus), the rank of the
# fundamental group of the realization.
print("homotopy rank:", homotopy_rank(g))

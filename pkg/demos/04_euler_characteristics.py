"""Closed formulas for the Euler characteristics, checked against graphs.

The plus/minus graphs of a Borel-level isogeny graph have Euler
characteristics expressible in Kronecker symbols and one imaginary
quadratic class number.  This sweep recomputes both sides.

Run:  python demos/04_euler_characteristics.py
"""

from math import gcd

from isozeta import (
    borel_euler_characteristics,
    build_isogeny_graph,
    euler_characteristic,
    oriented_graphs,
)

print(f"{'p':>3} {'ell':>3} {'N':>2} | {'formula':>10} | {'graph':>10}")
for p in (5, 7, 11, 13, 17, 19, 23):
    for ell in (2, 3):
        for n in (1, 2, 3):
            if gcd(n, p * ell) != 1:
                continue
            rep = borel_euler_characteristics(p, ell, n)
            res = build_isogeny_graph(p, ell, f"borel0:{n}")
            plus, minus = oriented_graphs(res.graph)
            cp, cm = euler_characteristic(plus), euler_characteristic(minus)
            mark = "" if (cp, cm) == (rep.chi_plus, rep.chi_minus) else "  <-- MISMATCH"
            print(
                f"{p:>3} {ell:>3} {n:>2} | "
                f"({rep.chi_plus:>3},{rep.chi_minus:>4}) | ({cp:>3},{cm:>4}){mark}"
            )

# The difference chi(plus) - chi(minus) is the number of self-dual edge
# classes, i.e. of 2-isogeny kernels fixed by their own dual -- a count
# of embeddings of small imaginary quadratic orders.
rep = borel_euler_characteristics(11, 2, 1)
print("\nself-dual count for (11, 2, 1):", rep.self_dual_count)
print("ingredients:", rep)

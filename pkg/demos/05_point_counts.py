"""Point counts on modular curves from isogeny-graph walk counts.

The count of points of X0(p) over F_{ell^r} equals
2(1 + ell^r) - chi(plus) + (-1)^(r-1) chi(minus) - N_r, with N_r the
closed walk count.  N_r itself can be produced a second way: cycles of
length d correspond to class groups of imaginary quadratic orders where
the prime above ell has order d, via d*c_d = sum m_p(O) h(O).

Run:  python demos/05_point_counts.py
"""

from fractions import Fraction

from isozeta import (
    asymptotic_report,
    build_isogeny_graph,
    class_number,
    cycle_count_series,
    cycle_orders,
    euler_characteristic,
    ihara_zeta,
    modular_point_count,
    nr_from_class_numbers,
    oriented_graphs,
)
from isozeta.quadforms import band_constant_from_genera, borel_euler_characteristics

p, ell, r = 11, 2, 3

# graph route
res = build_isogeny_graph(p, ell, "full:1")
plus, minus = oriented_graphs(res.graph)
n_r = cycle_count_series(ihara_zeta(res.graph), r)[r - 1]
count = modular_point_count(
    p, ell, r, n_r, euler_characteristic(plus), euler_characteristic(minus)
)
print(f"graph route:        #X0({p})(F_{ell ** r}) = {count}   (N_{r} = {n_r})")

# class-number route
for d in (1, 2, 3):
    orders = cycle_orders(d, p, ell)
    print(f"  I_{d} =", [(o.discriminant, class_number(o.discriminant)) for o in orders])
rep = borel_euler_characteristics(p, ell, 1)
count2 = modular_point_count(
    p, ell, r, nr_from_class_numbers(r, p, ell), rep.chi_plus, rep.chi_minus
)
print(f"class-number route: #X0({p})(F_{ell ** r}) = {count2}")

# Asymptotically the walk counts approach ell^r; the deviation is bounded
# by the curve genera through the Weil bounds.
k = band_constant_from_genera(p, 1)
print(f"\nN_r / {ell}^r with band constant K = {k}:")
for row in asymptotic_report(res.graph, 10, k):
    print(
        f"  r={row.r:>2}  N_r={row.n_r:>6}  ratio={float(Fraction(row.ratio)):.4f}"
        f"  in band: {row.in_band}"
    )

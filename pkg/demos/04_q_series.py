"""Exact q-series: products, the triple product and four identities."""

from fractions import Fraction

from thetadft.qidentities import (
    check_odd_square_identity,
    check_rogers_ramanujan,
    check_square_identity,
    check_triangular_identity,
    rr_substitution_trace,
)
from thetadft.qseries import ExponentLattice, Monomial, poch, series_eq, theta_product_series, theta_sum_series

# Euler's product (q;q)_inf: nonzero only at pentagonal numbers
lat = ExponentLattice(D=1, q_order=40)
euler = poch(Monomial(1, 1), 1, lat)
print("(q;q)_inf:", [(e, c) for (e, _), c in euler])

# the product form of theta against the direct sum, exactly
lat = ExponentLattice(D=1, q_order=60)
print("triple product holds to q^60:", series_eq(theta_sum_series(lat), theta_product_series("theta", lat)).equal)

# fractional powers live on a 1/D lattice; q^{1/4} needs D divisible by 4
s = theta_product_series("theta_h0", ExponentLattice(D=8, q_order=5), doubled=True)
print("theta_h0 starts at q^", s.min_q())

# the four identities
for r in (check_rogers_ramanujan(50), check_square_identity(100),
          check_odd_square_identity(200), check_triangular_identity(60)):
    print(f"{r.name:<17} {r.verdict}  q_order={r.q_order}  D={r.D}")

# the same Rogers-Ramanujan type identity re-derived by substitutions
trace = rr_substitution_trace(30)
for name, cmp in trace.checks:
    print(f"  {name:<11} {'ok' if cmp.equal else cmp.witness}")
print("  B' starts:", [(Fraction(e, 8), k, c) for (e, k), c in trace.step("B'")][:6])

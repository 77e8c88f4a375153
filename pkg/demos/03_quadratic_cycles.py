"""
Periodic quadratic pairs and the skew map
=========================================

A pair {x^2+bx+r, x^2+cx+r} is tracked through (u, v, r) = (b-c, b+c, r).
One self-image step is (u, v, r) -> (uv, -u^2, r u^2), and t steps
have a closed form driven by roots of unity of order dividing 2 d_t.
"""

from wedgelab import construct_periodic_sets, counting_formulas, field_create, format_poly, minimal_orders
from wedgelab.quadratic import SkewState, d_t, e_t, skew_closed_form, skew_step

for t in range(1, 9):
    print(f"t={t:2d}  e_t={e_t(t):4d}  d_t={d_t(t):4d}  orders {minimal_orders(t)}")

# closed form against plain iteration
F = field_create(101)
s = SkewState(F, 3, 17, 5)
cur = s
for t in range(1, 11):
    cur = skew_step(cur)
    assert skew_closed_form(s, t) == cur
print("closed form agrees with 10 steps over F_101")

# the unique six-cycle over F_7
(cycle,) = construct_periodic_sets(field_create(7), 6)
print(f"F_7 six-cycle driven by zeta={cycle.zeta} of order {cycle.order}:")
for t, (f, g) in enumerate(cycle.pairs):
    print(f"  t={t}: {format_poly(f)} ; {format_poly(g)}")

cf = counting_formulas(7)
print("stable 2-sets over F_7: I", cf.N_I, "II", cf.N_II, "III", cf.N_III)
print("points of minimal period 6:", cf.minimal_period_count(6))

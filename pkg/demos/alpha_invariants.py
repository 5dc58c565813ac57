"""
Alpha invariants of toric pairs
===============================

alpha(X, B; L) is read off the moment polytope of L: one width per ray.
For -K-B it equals gamma(0 in P), where P is the hull of e_i / a_i.
"""
from fractions import Fraction

from toric_alpha.toric import (
    ToricLogPair,
    alpha_invariant,
    alpha_per_ray,
    gamma_anticanonical,
    gb_vb_checks,
    mld,
    moment_polytope,
    product_alpha_check,
)

P2 = ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1)], a=[1, 1, 1])
for l in ([1, 0, 0], [2, 0, 0], None):
    print("P^2, L =", l or "-K", " alpha =", alpha_invariant(P2, l))

# a weighted projective plane with a boundary divisor
pair = ToricLogPair(rays=[(1, 0), (0, 1), (-7, -3)], a=[1, 1, Fraction(1, 2)])
print("moment polytope vertices:", [[str(x) for x in v] for v in moment_polytope(pair).vertices])
print("per-ray thresholds:", [str(t) for t in alpha_per_ray(pair)])
print("mld =", mld(pair), " gamma =", gamma_anticanonical(pair))
print(gb_vb_checks(pair, 2).as_dict())

# on a curve, alpha is mld / deg
line = ToricLogPair(rays=[(1,), (-1,)], a=[Fraction(1, 3), 1])
print("curve:", alpha_invariant(line, [5, 0]), "=", mld(line) / 5)

# products take the minimum
print(product_alpha_check(P2, [2, 0, 0], line, [1, 0]).as_dict())

"""
Rank one toric log Fano pairs
=============================

Barycentric data (x, a) determine the pair.  We build the extremal
examples, compare the fractional-part mld with the lattice computation, and
show a pair with a small log discrepancy together with its witness.
"""
from fractions import Fraction

from toric_alpha.fano_rank1 import (
    alpha_and_cartier,
    analyze,
    exists_z_criterion,
    extremal_example,
    from_barycentric,
    mld_scan,
    to_toric_pair,
    volume_q_scaled,
)
from toric_alpha.toric import mld

for d, q in [(1, 1), (2, 1), (2, 2), (3, 1)]:
    f = extremal_example(d, q)
    alpha, r = alpha_and_cartier(f)
    print(f"d={d} q={q}: x={[str(v) for v in f.x]} alpha={alpha} mld={mld_scan(f)}"
          f" r={r} (-q(K+B))^d={volume_q_scaled(f, q)}")

f = from_barycentric([Fraction(1, 5), Fraction(1, 5), Fraction(3, 5)], [1, 1, 1])
print("scan mld", mld_scan(f), " lattice mld", mld(to_toric_pair(f)))
print("witness for mld < 1:", exists_z_criterion(f, 1))
print(analyze(f, 1))

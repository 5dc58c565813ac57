"""
The sharp triangle
==================

The triangle conv((1, 0), (0, 1), (-3, -2)) has the origin as its only
interior lattice point, and the origin sits as close to the boundary as any
such triangle allows.  We measure that here and then search a box of
triangles to see that nothing does worse.
"""
from fractions import Fraction

from toric_alpha.polytope import Polytope, asymmetry, barycentric_gamma, gamma_point
from toric_alpha.simplex_bounds import enumerate_and_verify, verify_ss
from toric_alpha.sylvester import gamma_bound

tri = Polytope.from_vertices([(1, 0), (0, 1), (-3, -2)])

# gamma is the smallest barycentric coordinate of the point
print("gamma(0 in T) =", gamma_point((0, 0), tri))
print("barycentric   =", barycentric_gamma(tri, (0, 0)))
print("asymmetry     =", asymmetry((0, 0), tri))

res = verify_ss([(1, 0), (0, 1), (-3, -2)], 1)
print("bound 1/6 attained:", res.equality, "witness", res.witness)

# every triangle with vertices in [-4, 4]^2 and a single interior lattice point
for q in (1, 2):
    c = enumerate_and_verify(2, 4, q)
    print(f"q={q}: {c.admissible} triangles, min gamma {c.min_gamma},"
          f" bound {gamma_bound(2, q)}, equality classes {c.equality_classes}")

# a point in the middle of a centrally symmetric body does best
print("square:", gamma_point((0, 0), Polytope.from_vertices([(-1, -1), (1, -1), (1, 1), (-1, 1)])),
      "=", Fraction(1, 2))

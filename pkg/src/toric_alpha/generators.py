"""Seeded random instances for the test harness and the command line.

Every generator takes a :class:`random.Random` so that a seed fixes the
whole stream.
"""
import math
import random
from fractions import Fraction

from .exact import dot, primitive_part, vec
from .fano_rank1 import RankOneFano
from .polytope import Polytope
from .sylvester import extremal_sum, extremal_vector, u
from .toric import NotCompleteError, ToricLogPair

SMALL_RATIONALS = tuple(sorted({Fraction(p, q) for q in range(1, 5) for p in range(1, q + 1)}))


def rng_from(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_lattice_polygon(rng, radius=3, points=5):
    """Convex hull of random lattice points; may be degenerate."""
    pts = [(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(points)]
    return Polytope.from_vertices(pts)


def random_polygon_with_interior(rng, radius=3, points=5):
    """A lattice polygon with at least one interior lattice point."""
    from .polytope import lattice_points
    while True:
        poly = random_lattice_polygon(rng, radius, points)
        if poly.is_full_dimensional and lattice_points(poly, "interior"):
            return poly


def random_rational_polytope(rng, d, npoints=None, radius=3, denominators=(1, 2, 3)):
    """A full-dimensional rational polytope with 0 in its interior."""
    npoints = npoints or d + 3
    while True:
        pts = [tuple(Fraction(rng.randint(-radius * den, radius * den), den)
                     for _ in range(d))
               for den in (rng.choice(denominators) for _ in range(npoints))]
        poly = Polytope.from_vertices(pts)
        if poly.is_full_dimensional and poly.contains((0,) * d, strict=True):
            return poly


def random_primitive(rng, d, radius=2):
    while True:
        v = tuple(rng.randint(-radius, radius) for _ in range(d))
        if any(v):
            return primitive_part(v)[0]


def random_toric_pair(rng, d, extra=None, radius=2, coefficients=SMALL_RATIONALS):
    """A complete toric log pair with random rays and log discrepancies."""
    if d == 1:
        rays = [(1,), (-1,)]
    else:
        while True:
            k = d + 1 + (rng.randint(0, 2) if extra is None else extra)
            rays = {random_primitive(rng, d, radius) for _ in range(k)}
            rays = sorted(rays)
            try:
                ToricLogPair(rays=rays, a=[1] * len(rays))
                break
            except NotCompleteError:
                continue
    a = [rng.choice(coefficients) for _ in rays]
    return ToricLogPair(rays=rays, a=a)


def random_divisor(rng, pair, spread=2, denominators=(1, 2)):
    """Coefficients ``l`` whose moment polytope contains a random point ``m0``."""
    d = pair.dim
    m0 = tuple(Fraction(rng.randint(-spread, spread), rng.choice(denominators)) for _ in range(d))
    return vec(-dot(m0, e) + Fraction(rng.randint(0, 2 * spread), rng.choice(denominators))
               for e in pair.rays)


def random_rank_one(rng, d, qmax=60, coefficients=SMALL_RATIONALS):
    """Valid barycentric data: ``q x`` has all ``d``-element gcds equal to 1."""
    while True:
        q = rng.randint(d + 1, qmax)
        cuts = sorted(rng.sample(range(1, q), d))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [q])]
        if all(math.gcd(*(parts[:i] + parts[i + 1:])) == 1 for i in range(d + 1)):
            x = [Fraction(p, q) for p in parts]
            a = [rng.choice(coefficients) for _ in parts]
            return RankOneFano(x=x, a=a)


def random_lhn_instance(rng, d, q, denominator=60):
    """Non-extremal ``(x, c)`` with ``x`` descending, ``1 <= c_i <= q`` and ``sum x`` above the threshold."""
    low = extremal_sum(d, q)
    top = u(d + 1, q)
    while True:
        x = sorted((Fraction(rng.randint(1, denominator), denominator * rng.randint(1, 2))
                    for _ in range(d)), reverse=True)
        if sum(x) >= low and tuple(x) != extremal_vector(d, q):
            break
        # push the mass up to the threshold, keeping the order
        lift = (low - sum(x)) / d + Fraction(rng.randint(0, 3), top * denominator)
        x = sorted((xi + lift for xi in x), reverse=True)
        if sum(x) >= low and tuple(x) != extremal_vector(d, q):
            break
    c = [Fraction(rng.randint(1, q)) for _ in range(d)]
    return tuple(x), tuple(c)

"""Sharp lower bounds for the distance of the origin to the boundary of
lattice simplices and polytopes, with an exhaustive planar census."""
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import determinant, format_rational, inverse, matvec, row_hermite_form, sub, vec
from .polytope import (
    Polytope,
    barycentric_coordinates,
    gamma_point,
    lattice_points,
    normalized_volume,
)
from .sylvester import gamma_bound, u


class PreconditionError(ValueError):
    """Raised with the offending data when a hypothesis fails."""

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data or {}


MAX_CENSUS_RADIUS = 8


def extremal_simplex(d, q):
    """Vertices ``e_1, ..., e_d`` and ``e_0 = -sum u(d+1,q)/(1+u(i,q)) e_i``."""
    top = u(d + 1, q)
    e0 = tuple(-(top // (1 + u(i, q))) for i in range(1, d + 1))
    basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return [e0] + basis


def _interior_multiples(vertices, q):
    """Nonzero ``z`` in ``Z^d`` with ``q z`` in the interior of the simplex."""
    d = len(vertices[0])
    lo = [math.ceil(Fraction(min(v[i] for v in vertices), q)) for i in range(d)]
    hi = [math.floor(Fraction(max(v[i] for v in vertices), q)) for i in range(d)]
    hits = []
    for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if not any(z):
            continue
        lam = barycentric_coordinates(vertices, [q * zi for zi in z])
        if min(lam) > 0:
            hits.append(z)
    return hits


@dataclass(frozen=True)
class SSResult:
    gamma: Fraction
    bound: Fraction
    equality: bool
    witness: tuple = None
    barycentric: tuple = ()

    @property
    def passed(self):
        return self.gamma >= self.bound

    def as_dict(self):
        return {
            "gamma": format_rational(self.gamma),
            "bound": format_rational(self.bound),
            "passed": self.passed,
            "equality": self.equality,
            "witness": [list(r) for r in self.witness] if self.witness else None,
            "barycentric": [format_rational(x) for x in self.barycentric],
        }


def verify_ss(vertices, q, check_precondition=True):
    """Check ``gamma(0 in S) >= q / u(d+1, q)`` for a lattice simplex ``S``.

    ``S`` must contain 0 in its interior and satisfy
    ``Z^d cap int(S / q) = {0}``.  On equality, also return the unimodular
    matrix carrying ``S`` to the extremal simplex and confirm it does.
    """
    verts = [tuple(int(x) for x in v) for v in vertices]
    d = len(verts[0])
    if len(verts) != d + 1:
        raise ValueError(f"a {d}-simplex needs {d + 1} vertices")
    if determinant([sub(v, verts[0]) for v in verts[1:]]) == 0:
        raise PreconditionError("degenerate simplex")
    lam = barycentric_coordinates(verts, (0,) * d)
    if min(lam) <= 0:
        raise PreconditionError("0 is not an interior point of the simplex")
    if check_precondition:
        bad = _interior_multiples(verts, q)
        if bad:
            raise PreconditionError(
                "the lattice meets int(S/q) away from 0",
                {"point": list(bad[0])},
            )
    bound = gamma_bound(d, q)
    gamma = min(lam)
    target = sorted([bound] + [Fraction(q, 1 + u(i, q)) for i in range(1, d + 1)])
    equality = sorted(lam) == target
    witness = None
    if equality:
        witness = _equality_witness(verts, lam, q)
    return SSResult(gamma=gamma, bound=bound, equality=equality,
                    witness=witness, barycentric=tuple(lam))


def _equality_witness(verts, lam, q):
    d = len(verts[0])
    order = sorted(range(d + 1), key=lambda i: lam[i])
    v0 = verts[order[0]]
    # coordinate q/(1+u(i,q)) decreases with i, so ascending order lists e_d..e_1
    by_index = {}
    for rank_pos, idx in enumerate(order[1:]):
        by_index[d - rank_pos] = verts[idx]
    V = [[by_index[i][r] for i in range(1, d + 1)] for r in range(d)]
    W = inverse(V)
    if any(x.denominator != 1 for row in W for x in row):
        raise AssertionError("equality case without a unimodular witness")
    W = tuple(tuple(int(x) for x in row) for row in W)
    assert abs(determinant(W)) == 1
    top = u(d + 1, q)
    expected = tuple(Fraction(-top, 1 + u(i, q)) for i in range(1, d + 1))
    assert matvec(W, vec(v0)) == expected
    return W


@dataclass(frozen=True)
class SHEReport:
    q: int
    bound: Fraction
    gammas: dict
    volume: Fraction
    volume_bound: Fraction
    card: int
    card_bound: Fraction

    @property
    def gamma_ok(self):
        return all(g >= self.bound for g in self.gammas.values())

    @property
    def volume_ok(self):
        return self.volume <= self.volume_bound

    @property
    def card_ok(self):
        return self.card <= self.card_bound

    @property
    def passed(self):
        return self.gamma_ok and self.volume_ok and self.card_ok

    def as_dict(self):
        return {
            "q": self.q,
            "bound": format_rational(self.bound),
            "gammas": {",".join(map(str, p)): format_rational(g) for p, g in self.gammas.items()},
            "volume": format_rational(self.volume),
            "volumeBound": format_rational(self.volume_bound),
            "latticePoints": self.card,
            "latticePointBound": format_rational(self.card_bound),
            "passed": self.passed,
        }


def verify_she(poly):
    """Sharp Hensley-type checks for a full-dimensional lattice polytope."""
    if any(x.denominator != 1 for v in poly.vertices for x in v):
        raise PreconditionError("vertices must be lattice points")
    if not poly.is_full_dimensional:
        raise PreconditionError("polytope must be full dimensional")
    interior = lattice_points(poly, "interior")
    if not interior:
        raise PreconditionError("no interior lattice points")
    d = poly.dim
    q = len(interior)
    scale = Fraction(u(d + 1, q), q) ** d
    return SHEReport(
        q=q,
        bound=gamma_bound(d, q),
        gammas={p: gamma_point(p, poly) for p in interior},
        volume=normalized_volume(poly),
        volume_bound=q * scale,
        card=len(lattice_points(poly, "closed")),
        card_bound=d + math.factorial(d) * q * scale,
    )


def verify_bl(vertices, q):
    """Bound for a simplex with vertices in ``(1/q) Z^d`` whose only interior
    lattice point is 0; reduces to :func:`verify_ss` on ``q S``."""
    verts = [vec(v) for v in vertices]
    S = Polytope.from_vertices(verts)
    d = len(verts[0])
    if not S.contains((0,) * d, strict=True):
        raise PreconditionError("0 is not interior")
    extra = [p for p in lattice_points(S, "interior") if any(p)]
    if extra:
        raise PreconditionError("interior lattice points besides 0", {"point": list(extra[0])})
    scaled = []
    for v in verts:
        w = [q * x for x in v]
        if any(x.denominator != 1 for x in w):
            raise PreconditionError("vertices are not in (1/q) Z^d")
        scaled.append(tuple(int(x) for x in w))
    res = verify_ss(scaled, q)
    assert res.gamma == gamma_point((0,) * d, S)
    return res


# -- planar census -----------------------------------------------------------

def canonical_form(vertices):
    """Invariant of a vertex set under ``GL_d(Z)`` (fixing the origin)."""
    d = len(vertices[0])
    best = None
    for perm in itertools.permutations(vertices):
        rows = [[v[r] for v in perm] for r in range(d)]
        form = row_hermite_form(rows)
        if best is None or form < best:
            best = form
    return best


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _admissible_triangle(A, B, C, q):
    """Integer-only filter: 0 interior and no ``q z`` (z != 0) in the interior."""
    s = _orient(A, B, C)
    if s == 0:
        return False
    s = 1 if s > 0 else -1

    def inside(P):
        return (s * _cross(sub(B, P), sub(C, P)) > 0
                and s * _cross(sub(C, P), sub(A, P)) > 0
                and s * _cross(sub(A, P), sub(B, P)) > 0)

    if not inside((0, 0)):
        return False
    xs = (A[0], B[0], C[0])
    ys = (A[1], B[1], C[1])
    for zx in range(-(-min(xs) // q), max(xs) // q + 1):
        for zy in range(-(-min(ys) // q), max(ys) // q + 1):
            if (zx or zy) and inside((q * zx, q * zy)):
                return False
    return True


def _orient(A, B, C):
    return _cross(sub(B, A), sub(C, A))


def _census_chunk(args):
    firsts, points, q = args
    out = []
    n = len(points)
    for i in firsts:
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                A, B, C = points[i], points[j], points[k]
                if _admissible_triangle(A, B, C, q):
                    out.append((A, B, C))
    return out


@dataclass
class Census:
    d: int
    radius: int
    q: int
    bound: Fraction
    triangles: int = 0
    admissible: int = 0
    min_gamma: Fraction = None
    equality_classes: list = field(default_factory=list)
    equality_count: int = 0
    violations: list = field(default_factory=list)
    extremal_form: tuple = None

    @property
    def passed(self):
        return not self.violations

    @property
    def equality_classes_extremal(self):
        return all(form == self.extremal_form for form in self.equality_classes)

    def as_dict(self):
        return {
            "d": self.d,
            "radius": self.radius,
            "q": self.q,
            "bound": format_rational(self.bound),
            "triangles": self.triangles,
            "admissible": self.admissible,
            "minGamma": None if self.min_gamma is None else format_rational(self.min_gamma),
            "equalityCount": self.equality_count,
            "equalityClasses": [[list(r) for r in f] for f in self.equality_classes],
            "equalityClassesExtremal": self.equality_classes_extremal,
            "violations": self.violations,
            "passed": self.passed,
        }


def _threads():
    try:
        return max(1, int(os.environ.get("TORIC_ALPHA_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_and_verify(d=2, radius=4, q=1):
    """Run :func:`verify_ss` on every admissible lattice triangle in
    ``[-radius, radius]^2`` (each vertex set counted once)."""
    if d != 2:
        raise ValueError("the census is implemented for d = 2 only")
    if radius > MAX_CENSUS_RADIUS:
        raise PreconditionError(f"radius {radius} exceeds the guard {MAX_CENSUS_RADIUS}")
    points = [(x, y) for x in range(-radius, radius + 1) for y in range(-radius, radius + 1)]
    n = len(points)
    census = Census(d=d, radius=radius, q=q, bound=gamma_bound(d, q),
                    extremal_form=canonical_form(extremal_simplex(d, q)))
    census.triangles = math.comb(n, 3)
    workers = _threads()
    chunks = [(list(range(w, n, workers)), points, q) for w in range(workers)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            found = [t for part in pool.map(_census_chunk, chunks) for t in part]
    else:
        found = _census_chunk(chunks[0])
    found.sort()
    classes = set()
    for tri in found:
        res = verify_ss(tri, q, check_precondition=False)
        census.admissible += 1
        if census.min_gamma is None or res.gamma < census.min_gamma:
            census.min_gamma = res.gamma
        if not res.passed:
            census.violations.append([list(v) for v in tri])
        if res.gamma == census.bound:
            census.equality_count += 1
            classes.add(canonical_form(tri))
    census.equality_classes = sorted(classes)
    return census

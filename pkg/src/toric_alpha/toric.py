"""Toric log pairs and their alpha-invariants.

A pair is a complete set of primitive rays ``e_i`` in ``N = Z^d`` with log
discrepancies ``a_i`` in ``[0, 1]``; the boundary is ``B = sum (1 - a_i) E_i``
and ``K + B = -sum a_i E_i``.  An invariant divisor ``L = sum l_i E_i`` has
moment polytope ``{m : <m, e_i> + l_i >= 0}`` in ``M_R``.  Everything the
alpha-invariant and the mld need is read off that polytope and the rays.
"""
import itertools
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    INF,
    as_fraction,
    dot,
    format_rational,
    is_primitive,
    lp_maximize,
    primitive_part,
    rank,
    solve_linear,
    sub,
    vec,
)
from .polytope import (
    EmptyPolytopeError,
    HalfSpace,
    Polytope,
    gamma_point,
    lattice_points,
    normalized_volume,
)
from .simplex_bounds import PreconditionError, _threads
from .sylvester import gamma_bound, volume_bound


class NotCompleteError(ValueError):
    """The rays do not span ``N_R`` positively."""


class NotQCartierError(ValueError):
    pass


MAX_FANO_RADIUS = 3


@dataclass(frozen=True)
class InvariantDivisor:
    l: tuple

    def __post_init__(self):
        object.__setattr__(self, "l", vec(self.l))


@dataclass(frozen=True)
class FiniteLinearSystem:
    divisor: InvariantDivisor
    points: tuple


def _coeffs(pair, L):
    if L is None:
        return pair.a
    if isinstance(L, InvariantDivisor):
        L = L.l
    L = vec(L)
    if len(L) != len(pair.rays):
        raise ValueError(f"divisor has {len(L)} coefficients for {len(pair.rays)} rays")
    return L


@dataclass(frozen=True)
class ToricLogPair:
    rays: tuple
    a: tuple
    max_cones: tuple = None
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in e) for e in self.rays)
        a = vec(self.a)
        if not rays:
            raise NotCompleteError("no rays")
        d = len(rays[0])
        if any(len(e) != d for e in rays):
            raise ValueError("rays have different dimensions")
        if len(a) != len(rays):
            raise ValueError(f"{len(a)} coefficients for {len(rays)} rays")
        for e in rays:
            if not any(e):
                raise ValueError("zero ray")
            if not is_primitive(e):
                prim, n = primitive_part(e)
                raise ValueError(f"ray {e} is not primitive; use {prim} (= ray / {n})")
        if any(not (0 <= ai <= 1) for ai in a):
            raise ValueError("log discrepancies must lie in [0, 1]")
        hull = Polytope.from_vertices(rays)
        if not hull.is_full_dimensional or not hull.contains((0,) * d, strict=True):
            raise NotCompleteError("0 is not interior to conv(rays): the fan is not complete")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "a", a)
        notes = []
        if self.max_cones is not None:
            cones = tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
            object.__setattr__(self, "max_cones", cones)
            box = moment_polytope(self)
            for cone in cones:
                psi = self.cartier_data(cone)
                if not box.contains(tuple(-x for x in psi)):
                    notes.append(f"-K-B is not nef on cone {list(cone)}")
        object.__setattr__(self, "warnings", tuple(notes))

    @property
    def dim(self):
        return len(self.rays[0])

    @property
    def boundary(self):
        return tuple(1 - ai for ai in self.a)

    @property
    def nef(self):
        """``None`` without cones, else whether ``-K-B`` is nef."""
        if self.max_cones is None:
            return None
        return not self.warnings

    def cartier_data(self, cone, l=None):
        """``psi`` with ``<psi, e_i> = l_i`` on the rays of ``cone``."""
        l = self.a if l is None else vec(l)
        rows = [self.rays[i] for i in cone]
        rhs = [l[i] for i in cone]
        psi = _solve_consistent(rows, rhs, self.dim)
        if psi is None:
            raise NotQCartierError(f"no linear function matches the coefficients on cone {list(cone)}")
        return psi

    def as_dict(self):
        out = {"dim": self.dim, "rays": [list(e) for e in self.rays],
               "a": [format_rational(x) for x in self.a]}
        if self.max_cones is not None:
            out["maxCones"] = [list(c) for c in self.max_cones]
        return out

    @classmethod
    def from_dict(cls, data):
        pair = cls(rays=data["rays"], a=data["a"], max_cones=data.get("maxCones"))
        if "dim" in data and data["dim"] != pair.dim:
            raise ValueError("dim does not match the rays")
        return pair


def _solve_consistent(rows, rhs, d):
    """Any solution of an over- or under-determined consistent system."""
    rows = [vec(r) for r in rows]
    basis_rows, basis_rhs = [], []
    for r, b in zip(rows, rhs):
        if rank(basis_rows + [r]) > len(basis_rows):
            basis_rows.append(r)
            basis_rhs.append(b)
    # complete to a square system with coordinate rows set to 0
    square, square_rhs = list(basis_rows), list(basis_rhs)
    for i in range(d):
        if len(square) == d:
            break
        unit = tuple(Fraction(int(i == j)) for j in range(d))
        if rank(square + [unit]) > len(square):
            square.append(unit)
            square_rhs.append(Fraction(0))
    psi = solve_linear(square, square_rhs)
    if any(dot(r, psi) != b for r, b in zip(rows, rhs)):
        return None
    return psi


# -- moment polytopes and widths ----------------------------------------------

def moment_polytope(pair, L=None):
    """``{m : <m, e_i> + l_i >= 0}``; ``L`` defaults to ``-K-B`` (``l = a``)."""
    l = _coeffs(pair, L)
    try:
        return Polytope.from_halfspaces(
            [HalfSpace.canonical(e, li) for e, li in zip(pair.rays, l)], pair.dim)
    except EmptyPolytopeError:
        raise EmptyPolytopeError("the moment polytope is empty: |nL| is empty for all n") from None


def _ray_values(pair, L, i):
    l = _coeffs(pair, L)
    box = moment_polytope(pair, l)
    return [dot(v, pair.rays[i]) + l[i] for v in box.vertices]


def width_at(pair, L, i):
    """``max_{m in box_L} <m, e_i> + l_i``."""
    return max(_ray_values(pair, L, i))


def fixed_mult_at(pair, L, i):
    """Stable fixed multiplicity along ``E_i``: the minimum of the same function."""
    return min(_ray_values(pair, L, i))


def _min_inf(values):
    return min(values, default=INF)


def gamma_finite_system(pair, system):
    """Per-ray and global thresholds of a torus-invariant finite linear system."""
    l = _coeffs(pair, system.divisor)
    pts = [vec(m) for m in system.points]
    if not pts:
        raise ValueError("the linear system has no members")
    for m in pts:
        if any(dot(m, e) + li < 0 for e, li in zip(pair.rays, l)):
            raise ValueError(f"{m} is outside the moment polytope")
    per_ray = []
    for e, ai, li in zip(pair.rays, pair.a, l):
        top = max(dot(m, e) + li for m in pts)
        per_ray.append(INF if top == 0 else ai / top)
    return _min_inf(per_ray), tuple(per_ray)


def alpha_per_ray(pair, L=None):
    l = _coeffs(pair, L)
    box = moment_polytope(pair, l)
    out = []
    for e, ai, li in zip(pair.rays, pair.a, l):
        w = max(dot(v, e) for v in box.vertices) + li
        out.append(INF if w == 0 else ai / w)
    return tuple(out)


def alpha_invariant(pair, L=None):
    """``min_i a_i / width_at(L, i)`` over rays with positive width."""
    return _min_inf(alpha_per_ray(pair, L))


def lct_invariant(pair, D):
    """Log canonical threshold of an effective invariant divisor."""
    dcoef = _coeffs(pair, D)
    if any(x < 0 for x in dcoef):
        raise ValueError("the divisor is not effective")
    return _min_inf(ai / di for ai, di in zip(pair.a, dcoef) if di > 0)


# -- discrepancies ------------------------------------------------------------

def support_value(pair, e):
    """``-min_{m in box} <m, e>``, homogeneous of degree 1 in ``e``."""
    box = moment_polytope(pair)
    return -min(dot(v, e) for v in box.vertices)


def log_discrepancy(pair, e):
    """Log discrepancy of the toric valuation along the primitive part of ``e``."""
    e = tuple(int(x) for x in e)
    if not any(e):
        raise ValueError("the zero vector defines no valuation")
    prim, n = primitive_part(e)
    if n != 1:
        warnings.warn(f"{e} is not primitive; using {prim}", stacklevel=2)
    return support_value(pair, prim)


def mld(pair):
    """Minimal log discrepancy, by enumerating ``(min a) * conv(e_i / a_i)``."""
    amin = min(pair.a)
    if amin == 0:
        return Fraction(0)
    body = Polytope.from_vertices([tuple(amin * x / ai for x in e)
                                   for e, ai in zip(pair.rays, pair.a)])
    box = moment_polytope(pair)
    best = None
    for z in lattice_points(body):
        if not any(z):
            continue
        value = -min(dot(v, z) for v in box.vertices)
        if best is None or value < best:
            best = value
    assert best is not None, "the rays themselves lie in the body"
    return best


def gamma_anticanonical(pair):
    """``gamma(0 in box_{-K-B})``; 0 as soon as some ``a_i`` vanishes."""
    if min(pair.a) == 0:
        return Fraction(0)
    return gamma_point((0,) * pair.dim, moment_polytope(pair))


# -- global statements as checks ------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    values: dict
    notes: tuple = ()

    def as_dict(self):
        return {"check": self.name, "passed": self.passed,
                "values": {k: _render(v) for k, v in self.values.items()},
                "notes": list(self.notes)}


def _render(v):
    if isinstance(v, (Fraction, int)) and not isinstance(v, bool) or v is INF:
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_render(x) for x in v]
    return v


def corollary_g0_check(pair, L):
    """For mobile ``L``: alpha equals ``sup{t : t (box_L - box_L) in box_{-K-B}}``."""
    l = _coeffs(pair, L)
    box_l = moment_polytope(pair, l)
    mult = [min(dot(v, e) for v in box_l.vertices) + li for e, li in zip(pair.rays, l)]
    if any(m != 0 for m in mult):
        raise PreconditionError("L has a fixed part", {"fixedMult": [format_rational(m) for m in mult]})
    lhs = alpha_invariant(pair, l)
    # containment test on the Minkowski difference, facet by facet
    diffs = {sub(v, w) for v in box_l.vertices for w in box_l.vertices}
    rhs = INF
    for e, ai in zip(pair.rays, pair.a):
        for dvec in diffs:
            s = dot(dvec, e)
            if s < 0:
                rhs = min(rhs, ai / -s)
    return Check("corollaryG0", lhs == rhs, {"alpha": lhs, "containment": rhs})


def sl_inequality_check(pair, L=None):
    """``alpha^d * (L^d) <= d^d`` for nef ``L``."""
    l = _coeffs(pair, L)
    notes = []
    if pair.max_cones is not None:
        box = moment_polytope(pair, l)
        for cone in pair.max_cones:
            psi = pair.cartier_data(cone, l)
            if not box.contains(tuple(-x for x in psi)):
                raise PreconditionError("L is not nef", {"cone": list(cone)})
    box = moment_polytope(pair, l)
    d = pair.dim
    if not box.is_full_dimensional:
        notes.append("L is not big: the inequality is vacuous")
        return Check("slInequality", True, {"volume": Fraction(0)}, tuple(notes))
    self_int = math.factorial(d) * normalized_volume(box)
    alpha = alpha_invariant(pair, l)
    lhs = alpha ** d * self_int
    return Check("slInequality", lhs <= d ** d,
                 {"alpha": alpha, "selfIntersection": self_int, "lhs": lhs, "rhs": d ** d},
                 tuple(notes))


@dataclass(frozen=True)
class GBReport:
    q: int
    mld: Fraction
    precondition: bool
    gamma: Fraction = None
    bound: Fraction = None
    volume: Fraction = None
    volume_bound: Fraction = None

    @property
    def gamma_ok(self):
        return not self.precondition or self.gamma >= self.bound

    @property
    def volume_ok(self):
        return not self.precondition or self.volume <= self.volume_bound

    @property
    def equality(self):
        return self.precondition and self.gamma == self.bound

    @property
    def passed(self):
        return self.gamma_ok and self.volume_ok

    def as_dict(self):
        out = {"q": self.q, "mld": format_rational(self.mld),
               "precondition": self.precondition, "passed": self.passed}
        if self.precondition:
            out.update(gamma=format_rational(self.gamma), bound=format_rational(self.bound),
                       equality=self.equality, volume=format_rational(self.volume),
                       volumeBound=format_rational(self.volume_bound))
        else:
            out["skipped"] = f"mld < 1/{self.q}"
        return out


def gb_vb_checks(pair, q):
    """Lower bound on ``gamma`` and upper bound on ``(-K-B)^d`` when ``mld >= 1/q``."""
    m = mld(pair)
    if m < Fraction(1, q):
        return GBReport(q=q, mld=m, precondition=False)
    d = pair.dim
    box = moment_polytope(pair)
    return GBReport(
        q=q, mld=m, precondition=True,
        gamma=gamma_anticanonical(pair), bound=gamma_bound(d, q),
        volume=math.factorial(d) * normalized_volume(box), volume_bound=volume_bound(d, q),
    )


def product_pair(p1, p2):
    d1, d2 = p1.dim, p2.dim
    rays = [tuple(e) + (0,) * d2 for e in p1.rays] + [(0,) * d1 + tuple(f) for f in p2.rays]
    cones = None
    if p1.max_cones is not None and p2.max_cones is not None:
        n1 = len(p1.rays)
        cones = [tuple(c1) + tuple(n1 + j for j in c2)
                 for c1 in p1.max_cones for c2 in p2.max_cones]
    return ToricLogPair(rays=rays, a=p1.a + p2.a, max_cones=cones)


def product_alpha_check(p1, L1, p2, L2):
    l1, l2 = _coeffs(p1, L1), _coeffs(p2, L2)
    prod = product_pair(p1, p2)
    lhs = alpha_invariant(prod, l1 + l2)
    rhs = min(alpha_invariant(p1, l1), alpha_invariant(p2, l2))
    return Check("productAlpha", lhs == rhs, {"product": lhs, "minOfFactors": rhs})


# -- finiteness census in dimension two -------------------------------------

def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _half(v):
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_key(v):
    """Sort key for the counterclockwise angle from the positive x-axis."""
    return (_half(v), Fraction(-v[0], abs(v[0]) + abs(v[1])) if _half(v) == 0
            else Fraction(v[0], abs(v[0]) + abs(v[1])))


def _turn(o, p, r):
    return (p[0] - o[0]) * (r[1] - o[1]) - (p[1] - o[1]) * (r[0] - o[0])


def _hull(points):
    """Counterclockwise hull vertices of planar integer points (no collinear ones)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _strictly_inside(hull, z, num=1, den=1):
    """``z`` in the interior of ``(num/den) * conv(hull)`` (hull counterclockwise)."""
    if len(hull) < 3:
        return False
    zx, zy = den * z[0], den * z[1]
    for p, r in zip(hull, hull[1:] + hull[:1]):
        if (r[0] - p[0]) * (zy - num * p[1]) - (r[1] - p[1]) * (zx - num * p[0]) <= 0:
            return False
    return True


def _epsilon_interior_hit(hull, eps):
    """A nonzero lattice point in the interior of ``eps * conv(hull)``."""
    if len(hull) < 3:
        return False
    num, den = eps.numerator, eps.denominator
    lo = [-((-num * min(p[i] for p in hull)) // den) for i in range(2)]
    hi = [(num * max(p[i] for p in hull)) // den for i in range(2)]
    for z in itertools.product(range(lo[0], hi[0] + 1), range(lo[1], hi[1] + 1)):
        if any(z) and _strictly_inside(hull, z, num, den):
            return True
    return False


def _hnf_two_rows(top, bottom):
    """Row Hermite form of a rank-2 integer matrix with two rows."""
    top, bottom = list(top), list(bottom)
    n = len(top)
    k = next(c for c in range(n) if top[c] or bottom[c])
    g, s, t = _xgcd(top[k], bottom[k])
    a, b = top[k] // g, bottom[k] // g
    top, bottom = ([s * x + t * y for x, y in zip(top, bottom)],
                   [-b * x + a * y for x, y in zip(top, bottom)])
    l = next(c for c in range(k + 1, n) if bottom[c])
    if bottom[l] < 0:
        bottom = [-y for y in bottom]
    f = top[l] // bottom[l]
    top = [x - f * y for x, y in zip(top, bottom)]
    return tuple(top), tuple(bottom)


def _xgcd(a, b):
    """``(g, s, t)`` with ``g = s a + t b = gcd(a, b) > 0``."""
    old_r, r, old_s, s_, old_t, t = a, b, 1, 0, 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s_ = s_, old_s - qt * s_
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def fan_canonical_form(rays):
    """Invariant of a planar complete ray set under ``GL_2(Z)``."""
    order = sorted(rays, key=_angle_key)
    n = len(order)
    best = None
    for seq in (order, order[::-1]):
        for s in range(n):
            rot = seq[s:] + seq[:s]
            form = _hnf_two_rows([v[0] for v in rot], [v[1] for v in rot])
            if best is None or form < best:
                best = form
    return best


def _cone_generators(e, f):
    """Lattice points of the half-open parallelogram on ``e, f``, plus ``e, f``."""
    det = _cross(e, f)
    out = {tuple(e), tuple(f)}
    xs = [0, e[0], f[0], e[0] + f[0]]
    ys = [0, e[1], f[1], e[1] + f[1]]
    for z in itertools.product(range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1)):
        # z = s e + t f with s, t in [0, 1)
        s = Fraction(_cross(z, f), det)
        t = Fraction(_cross(e, z), det)
        if 0 <= s < 1 and 0 <= t < 1 and any(z):
            out.add(z)
    return sorted(out)


def _feasible_boundary(order, eps):
    """Some ``a`` in ``[eps, 1]^n`` making ``-K-B`` nef with mld at least ``eps``.

    ``order`` lists the rays counterclockwise; the maximal cones are the
    consecutive pairs.  In the plane, nefness is convexity of the support
    function across each wall.  The lattice points of a cone are nonnegative
    combinations of the generators from :func:`_cone_generators`, so the mld
    condition only needs those.  Among feasible ``a`` the LP picks one
    maximizing ``sum a``.
    """
    n = len(order)
    A, b = [], []

    def psi_form(i, j, g):
        """``<psi, g>`` for the cone on rays ``i, j`` as a linear form in ``a``."""
        e, f = order[i], order[j]
        det = _cross(e, f)
        row = [Fraction(0)] * n
        row[i] += Fraction(_cross(g, f), det)
        row[j] += Fraction(_cross(e, g), det)
        return row

    for k in range(n):
        i, j, h = k, (k + 1) % n, (k + 2) % n
        row = psi_form(i, j, order[h])
        row[h] -= 1
        A.append(row)
        b.append(Fraction(0))
        for g in _cone_generators(order[i], order[j]):
            if g in (order[i], order[j]):
                continue
            A.append([-x for x in psi_form(i, j, g)])
            b.append(-eps)
    for h in range(n):
        unit = [Fraction(int(h == k)) for k in range(n)]
        A.append(unit)
        b.append(Fraction(1))
        A.append([-x for x in unit])
        b.append(-eps)
    result = lp_maximize([1] * n, A, b)
    if result is None:
        return None
    a = result[1]
    assert all(dot(row, a) <= bi for row, bi in zip(A, b))
    return a


def _dfs_ray_sets(vectors, eps):
    """Subsets of ``vectors`` (kept in angular order) that are complete and
    leave the interior of ``eps * conv`` free of nonzero lattice points.
    The second property passes to subsets, so it prunes the search."""
    found = []

    def visit(start, chosen, hull):
        if len(chosen) >= 3 and _strictly_inside(hull, (0, 0)):
            found.append(tuple(chosen))
        for k in range(start, len(vectors)):
            nxt = chosen + [vectors[k]]
            nxt_hull = _hull(nxt)
            if _epsilon_interior_hit(nxt_hull, eps):
                continue
            visit(k + 1, nxt, nxt_hull)

    visit(0, [], [])
    return found


@dataclass
class FanoCensus:
    d: int
    epsilon: Fraction
    q: int
    radius: int
    derived_radius: int
    volume_bound: Fraction
    members: list = field(default_factory=list)
    checks_failed: list = field(default_factory=list)

    @property
    def complete(self):
        return self.radius >= self.derived_radius

    @property
    def count(self):
        return len(self.members)

    @property
    def passed(self):
        return not self.checks_failed

    def as_dict(self):
        return {
            "d": self.d,
            "epsilon": format_rational(self.epsilon),
            "q": self.q,
            "radius": self.radius,
            "derivedRadius": self.derived_radius,
            "volumeBound": format_rational(self.volume_bound),
            "complete": self.complete,
            "count": self.count,
            "members": [m.as_dict() for m in self.members],
            "checksFailed": self.checks_failed,
            "passed": self.passed,
        }


def fano_finiteness_census(d=2, epsilon=1, radius=1):
    """Toric log Fano (weak, ``-K-B`` nef) pairs with ``mld >= epsilon``.

    Rays are enumerated in ``[-radius, radius]^d``.  The radius that makes the
    list complete comes from ``vol(P - P) <= 2^d / (gamma^d eps^d)``, which is
    van der Corput applied to the symmetric body ``eps gamma (P - P)``: in a
    Minkowski-reduced basis every ray then has coordinates at most half that
    volume.  ``complete`` reports whether ``radius`` reached it.
    """
    eps = as_fraction(epsilon)
    if not 0 < eps <= 1:
        raise PreconditionError("epsilon must lie in (0, 1]")
    if d not in (1, 2):
        raise PreconditionError("the census is implemented for d <= 2")
    if radius > MAX_FANO_RADIUS:
        raise PreconditionError(f"radius {radius} exceeds the guard {MAX_FANO_RADIUS}",
                                {"radius": radius, "guard": MAX_FANO_RADIUS})
    q = math.ceil(1 / eps)
    vb = 2 ** d / (gamma_bound(d, q) ** d * eps ** d)
    census = FanoCensus(d=d, epsilon=eps, q=q, radius=radius,
                        derived_radius=math.floor(vb / 2) if d == 2 else 1,
                        volume_bound=vb)
    if d == 1:
        # the only complete primitive configuration in rank one
        census.radius = max(radius, 1)
        pairs = [ToricLogPair(rays=((1,), (-1,)), a=(1, 1), max_cones=((0,), (1,)))]
    else:
        vectors = sorted(((x, y) for x in range(-radius, radius + 1)
                          for y in range(-radius, radius + 1)
                          if (x or y) and math.gcd(x, y) == 1), key=_angle_key)
        classes = {}
        for rays in _dfs_ray_sets(vectors, eps):
            form = fan_canonical_form(rays)
            if form not in classes:
                classes[form] = rays
        orders = [sorted(classes[form], key=_angle_key) for form in sorted(classes)]
        workers = _threads()
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                boundaries = list(pool.map(_feasible_boundary, orders, [eps] * len(orders)))
        else:
            boundaries = [_feasible_boundary(order, eps) for order in orders]
        pairs = []
        for order, a in zip(orders, boundaries):
            if a is None:
                continue
            n = len(order)
            cones = [(k, (k + 1) % n) for k in range(n)]
            pairs.append(ToricLogPair(rays=order, a=a, max_cones=cones))
    for pair in pairs:
        report = gb_vb_checks(pair, q)
        sl = sl_inequality_check(pair)
        problems = []
        if mld(pair) < eps:
            problems.append("mld below epsilon")
        if pair.nef is False:
            problems.append("not nef")
        if not report.precondition or not report.passed:
            problems.append("global bounds")
        if not sl.passed:
            problems.append("sl inequality")
        hull = Polytope.from_vertices(pair.rays)
        diff = Polytope.from_vertices([sub(v, w) for v in hull.vertices for w in hull.vertices])
        if normalized_volume(diff) > vb:
            problems.append("volume of P - P")
        if problems:
            census.checks_failed.append({"rays": [list(e) for e in pair.rays], "problems": problems})
        census.members.append(pair)
    return census


def same_fan_class(rays1, rays2):
    return fan_canonical_form(list(rays1)) == fan_canonical_form(list(rays2))


__all__ = [
    "INF", "InvariantDivisor", "FiniteLinearSystem", "ToricLogPair", "NotCompleteError",
    "NotQCartierError", "moment_polytope", "width_at", "fixed_mult_at", "gamma_finite_system",
    "alpha_per_ray", "alpha_invariant", "lct_invariant", "support_value", "log_discrepancy",
    "mld", "gamma_anticanonical", "corollary_g0_check", "sl_inequality_check", "gb_vb_checks",
    "GBReport", "Check", "product_pair", "product_alpha_check", "fano_finiteness_census",
    "fan_canonical_form", "same_fan_class", "FanoCensus",
]

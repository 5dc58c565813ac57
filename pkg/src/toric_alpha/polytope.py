"""Exact rational polytopes.

A :class:`Polytope` carries both its vertex list and its irredundant facet
inequalities.  Half-spaces are written ``<m, normal> + offset >= 0`` with a
primitive integer normal, which is how moment polytopes of toric divisors
appear.

Vertex and facet enumeration are brute force over subsets of size ``d``.
That is exponential in the number of inequalities, but every polytope in
this package has a handful of facets and exactness is the point.
"""
import itertools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    DegenerateSystemError,
    as_fraction,
    dot,
    determinant,
    integral_direction,
    nullspace,
    rank,
    solve_linear,
    sub,
    vec,
)


class NotAPolytopeError(ValueError):
    """The half-space intersection is unbounded."""


class EmptyPolytopeError(ValueError):
    """The half-space intersection is empty."""


class OutsidePolytopeError(ValueError):
    """A point expected to lie in a polytope does not."""


class BoundaryPointError(ValueError):
    """A point expected in the interior lies on the boundary."""


@dataclass(frozen=True)
class HalfSpace:
    """``{m : <m, normal> + offset >= 0}``."""

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(x) for x in self.normal))
        object.__setattr__(self, "offset", as_fraction(self.offset))
        if not any(self.normal):
            raise ValueError("half-space normal must be nonzero")

    @classmethod
    def canonical(cls, normal, offset):
        """Rescale a rational inequality so that its normal is primitive."""
        normal = vec(normal)
        offset = as_fraction(offset)
        prim = integral_direction(normal)
        # ratio between the primitive normal and the given one (positive)
        idx = next(i for i, x in enumerate(normal) if x != 0)
        factor = Fraction(prim[idx]) / normal[idx]
        return cls(prim, offset * factor)

    def value(self, m):
        return dot(m, self.normal) + self.offset

    def contains(self, m, strict=False):
        v = self.value(m)
        return v > 0 if strict else v >= 0


def _sort_key(v):
    return tuple(v)


@dataclass(frozen=True, eq=False)
class Polytope:
    """A compact rational polytope in ``R^dim``.

    ``facets`` are the irredundant inequalities when the polytope is full
    dimensional, and empty otherwise ("affine-hull mode": computations pass
    to affine coordinates on the span of the vertices).
    """

    dim: int
    vertices: tuple
    facets: tuple = ()
    halfspaces: tuple = ()
    redundant: tuple = ()
    affine_dim: int = field(default=-1)

    @property
    def is_full_dimensional(self):
        return self.affine_dim == self.dim

    @property
    def degenerate(self):
        return self.affine_dim < self.dim

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_vertices(cls, points):
        """Convex hull of finitely many rational points."""
        pts = sorted({vec(p) for p in points}, key=_sort_key)
        if not pts:
            raise EmptyPolytopeError("no points")
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ValueError("points have different dimensions")
        adim = _affine_dimension(pts)
        if adim < dim:
            verts = _chart_hull_vertices(pts, adim)
            return cls(dim=dim, vertices=tuple(verts), affine_dim=adim)
        facets = _facets_of_points(pts, dim)
        verts = [p for p in pts if _is_vertex(p, facets, dim)]
        return cls(dim=dim, vertices=tuple(verts), facets=tuple(facets),
                   affine_dim=dim)

    @classmethod
    def from_halfspaces(cls, halfspaces, dim=None):
        """Intersection of half-spaces; vertices are enumerated exactly."""
        hs = tuple(h if isinstance(h, HalfSpace) else HalfSpace.canonical(*h)
                   for h in halfspaces)
        if not hs:
            raise NotAPolytopeError("no half-spaces: not a polytope")
        dim = dim or len(hs[0].normal)
        normals = [h.normal for h in hs]
        if rank(normals) < dim:
            raise NotAPolytopeError("half-spaces contain a line: empty or not a polytope")
        for sub_normals in itertools.combinations(normals, dim - 1):
            if dim > 1 and rank(sub_normals) < dim - 1:
                continue
            ray = nullspace(sub_normals, dim)
            if len(ray) != 1:
                continue
            r = ray[0]
            for sgn in (1, -1):
                if all(sgn * dot(r, n) >= 0 for n in normals):
                    raise NotAPolytopeError("half-spaces define an unbounded region: not a polytope")
        verts = set()
        for sub_hs in itertools.combinations(hs, dim):
            M = [h.normal for h in sub_hs]
            try:
                p = solve_linear(M, [-h.offset for h in sub_hs])
            except DegenerateSystemError:
                continue
            if all(h.contains(p) for h in hs):
                verts.add(p)
        if not verts:
            raise EmptyPolytopeError("half-spaces have empty intersection")
        verts = sorted(verts, key=_sort_key)
        adim = _affine_dimension(verts)
        if adim < dim:
            poly = cls.from_vertices(verts)
            return cls(dim=dim, vertices=poly.vertices, halfspaces=hs,
                       redundant=(), affine_dim=adim)
        facets, redundant = [], []
        seen = set()
        for i, h in enumerate(hs):
            tight = [v for v in verts if h.value(v) == 0]
            if tight and _affine_dimension(tight) == dim - 1 and h not in seen:
                seen.add(h)
                facets.append(h)
            else:
                redundant.append(i)
        return cls(dim=dim, vertices=tuple(verts), facets=tuple(facets),
                   halfspaces=hs, redundant=tuple(redundant), affine_dim=dim)

    # -- queries --------------------------------------------------------------

    def contains(self, point, strict=False):
        """Membership test; ``strict`` asks for the (relative) interior."""
        point = vec(point)
        if self.is_full_dimensional:
            return all(f.contains(point, strict) for f in self.facets)
        chart = _Chart(self.vertices)
        coords = chart.coordinates(point)
        if coords is None:
            return False
        if chart.k == 0:
            # a point is its own relative interior
            return True
        return chart.polytope.contains(coords, strict)

    def translate(self, v):
        v = vec(v)
        return Polytope.from_vertices([tuple(a + b for a, b in zip(p, v)) for p in self.vertices])

    def scale(self, c):
        c = as_fraction(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return Polytope.from_vertices([tuple(c * a for a in p) for p in self.vertices])

    def __repr__(self):
        shown = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{shown}])"


def _affine_dimension(points):
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def _facets_of_points(points, dim):
    if dim == 1:
        xs = [p[0] for p in points]
        return [HalfSpace((1,), -min(xs)), HalfSpace((-1,), max(xs))]
    found = {}
    for subset in itertools.combinations(points, dim):
        base = subset[0]
        diffs = [sub(p, base) for p in subset[1:]]
        ns = nullspace(diffs, dim)
        if len(ns) != 1:
            continue
        n = ns[0]
        vals = [dot(n, sub(p, base)) for p in points]
        if all(v >= 0 for v in vals):
            sign = 1
        elif all(v <= 0 for v in vals):
            sign = -1
        else:
            continue
        normal = tuple(sign * x for x in n)
        h = HalfSpace.canonical(normal, -dot(normal, base))
        found[h] = None
    return sorted(found, key=lambda h: (h.normal, h.offset))


def _is_vertex(p, facets, dim):
    tight = [f.normal for f in facets if f.value(p) == 0]
    return rank(tight) == dim


class _Chart:
    """Affine coordinates on the affine span of a point set."""

    def __init__(self, points):
        points = [vec(p) for p in points]
        self.base = points[0]
        dirs = []
        for p in points[1:]:
            cand = dirs + [sub(p, self.base)]
            if rank(cand) == len(cand):
                dirs = cand
        self.dirs = dirs
        self.k = len(dirs)
        self._pts = points
        self._polytope = None

    def coordinates(self, point):
        """Coordinates of ``point`` in the chart, or None off the affine span."""
        target = sub(vec(point), self.base)
        if self.k == 0:
            return () if not any(target) else None
        ambient = len(target)
        # rows: one equation per ambient coordinate, unknowns = k
        rows = [[d[i] for d in self.dirs] for i in range(ambient)]
        chosen, chosen_rhs = [], []
        for row, rhs in zip(rows, target):
            if rank(chosen + [row]) > len(chosen):
                chosen.append(row)
                chosen_rhs.append(rhs)
            if len(chosen) == self.k:
                break
        c = solve_linear(chosen, chosen_rhs)
        recon = [dot(row, c) for row in rows]
        if list(recon) != list(target):
            return None
        return c

    @property
    def polytope(self):
        if self._polytope is None:
            if self.k == 0:
                self._polytope = None
            else:
                self._polytope = Polytope.from_vertices([self.coordinates(p) for p in self._pts])
        return self._polytope


def _chart_hull_vertices(points, adim):
    if adim == 0:
        return [points[0]]
    chart = _Chart(points)
    hull = chart.polytope
    keep = {tuple(v) for v in hull.vertices}
    return [p for p in points if tuple(chart.coordinates(p)) in keep]


# -- operations ---------------------------------------------------------------

def vertices_from_halfspaces(halfspaces, dim=None):
    return Polytope.from_halfspaces(halfspaces, dim)


def dual(poly):
    """``{y : <y, v> + 1 >= 0 for all v in poly}``; needs 0 in the interior."""
    zero = tuple(Fraction(0) for _ in range(poly.dim))
    if not poly.is_full_dimensional or not poly.contains(zero, strict=True):
        raise NotAPolytopeError("0 is not interior: the dual is unbounded")
    return Polytope.from_halfspaces([HalfSpace.canonical(v, 1) for v in poly.vertices], poly.dim)


def width(poly, e):
    """``max - min`` of ``<., e>`` over the polytope."""
    e = vec(e)
    vals = [dot(v, e) for v in poly.vertices]
    return max(vals) - min(vals)


def support_min(poly, e):
    """``min_{m in poly} <m, e>``."""
    e = vec(e)
    return min(dot(v, e) for v in poly.vertices)


def support_max(poly, e):
    e = vec(e)
    return max(dot(v, e) for v in poly.vertices)


def gamma_point(point, poly):
    """Largest ``t`` with ``P + t (poly - poly)`` inside ``poly``.

    For a full-dimensional polytope this is the minimum over facets of the
    slack of ``P`` divided by the width of the polytope along the facet
    normal.  Lower-dimensional polytopes are handled in affine coordinates
    on their span.
    """
    point = vec(point)
    if not poly.contains(point):
        raise OutsidePolytopeError(f"{point} is not in the polytope")
    if not poly.is_full_dimensional:
        chart = _Chart(poly.vertices)
        if chart.k == 0:
            return Fraction(0)
        return gamma_point(chart.coordinates(point), chart.polytope)
    return min(f.value(point) / width(poly, f.normal) for f in poly.facets)


def asymmetry(point, poly):
    """Coefficient of asymmetry of ``poly`` about an interior point."""
    g = gamma_point(point, poly)
    if g == 0:
        raise BoundaryPointError("point on the boundary: infinite asymmetry")
    return 1 / g - 1


def barycentric_coordinates(simplex_vertices, point):
    """Barycentric coordinates of ``point`` in the affine span of the simplex."""
    verts = [vec(v) for v in simplex_vertices]
    point = vec(point)
    k = len(verts)
    if _affine_dimension(verts) != k - 1:
        raise DegenerateSystemError("degenerate simplex")
    rows = [[v[i] for v in verts] for i in range(len(point))] + [[Fraction(1)] * k]
    rhs = list(point) + [Fraction(1)]
    chosen, chosen_rhs = [], []
    for row, r in zip(rows[::-1], rhs[::-1]):
        if rank(chosen + [row]) > len(chosen):
            chosen.append(row)
            chosen_rhs.append(r)
        if len(chosen) == k:
            break
    lam = solve_linear(chosen, chosen_rhs)
    if any(dot(row, lam) != r for row, r in zip(rows, rhs)):
        raise OutsidePolytopeError("point is off the affine span of the simplex")
    return lam


def barycentric_gamma(simplex, point):
    """Minimum barycentric coordinate of ``point`` in a simplex."""
    verts = simplex.vertices if isinstance(simplex, Polytope) else simplex
    lam = barycentric_coordinates(verts, point)
    if min(lam) < 0:
        raise OutsidePolytopeError("point is outside the simplex")
    return min(lam)


def bounding_box(poly):
    lo = [math.floor(min(v[i] for v in poly.vertices)) for i in range(poly.dim)]
    hi = [math.ceil(max(v[i] for v in poly.vertices)) for i in range(poly.dim)]
    return lo, hi


def lattice_points(poly, mode="closed"):
    """Integer points of the polytope in lexicographic order.

    ``mode`` is ``"closed"`` or ``"interior"``; the interior of a
    lower-dimensional polytope is empty.
    """
    if mode not in ("closed", "interior"):
        raise ValueError("mode must be 'closed' or 'interior'")
    strict = mode == "interior"
    if strict and not poly.is_full_dimensional:
        return []
    lo, hi = bounding_box(poly)
    out = []
    for z in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if poly.contains(z, strict=strict):
            out.append(z)
    return out


def simplex_volume(vertices):
    """Euclidean volume of a simplex (given by ``d + 1`` points in ``R^d``)."""
    base = vec(vertices[0])
    edges = [sub(vec(v), base) for v in vertices[1:]]
    return abs(determinant(edges)) / math.factorial(len(edges))


def triangulate(poly):
    """Pulling triangulation: list of simplices given as vertex tuples."""
    if not poly.is_full_dimensional:
        raise ValueError("triangulation needs a full-dimensional polytope")
    facet_sets = [frozenset(v for v in poly.vertices if f.value(v) == 0) for f in poly.facets]

    def faces_of(face, k):
        subs = set()
        for fs in facet_sets:
            g = face & fs
            if len(g) >= k and g != face and _affine_dimension(sorted(g)) == k - 1:
                subs.add(frozenset(g))
        return subs

    def tri(face, k):
        if k == 0:
            return [(next(iter(face)),)]
        apex = min(face)
        out = []
        for sub_face in faces_of(face, k):
            if apex in sub_face:
                continue
            for s in tri(sub_face, k - 1):
                out.append((apex,) + s)
        return out

    return tri(frozenset(poly.vertices), poly.dim)


def normalized_volume(poly):
    """Volume with respect to the unit lattice cell (``vol`` of the unit cube is 1)."""
    if not poly.is_full_dimensional:
        warnings.warn("lower-dimensional polytope has volume 0", stacklevel=2)
        return Fraction(0)
    return sum((simplex_volume(s) for s in triangulate(poly)), Fraction(0))


def is_centrally_symmetric(poly, center):
    c = vec(center)
    verts = {tuple(v) for v in poly.vertices}
    return all(tuple(2 * ci - vi for ci, vi in zip(c, v)) in verts for v in verts)


@dataclass(frozen=True)
class VanDerCorputReport:
    interior_points: int
    gamma: Fraction
    volume: Fraction
    bound: Fraction

    @property
    def passed(self):
        return self.interior_points >= self.bound


def van_der_corput_check(poly):
    """``|Z^d cap int(poly)| >= gamma(0 in poly)^d vol(poly)``."""
    zero = (0,) * poly.dim
    if not poly.contains(zero, strict=True):
        raise BoundaryPointError("0 must be an interior point")
    g = gamma_point(zero, poly)
    vol = normalized_volume(poly)
    count = len(lattice_points(poly, "interior"))
    return VanDerCorputReport(count, g, vol, g ** poly.dim * vol)


def cube(d, r=1):
    """``[-r, r]^d``."""
    return Polytope.from_vertices(itertools.product((-r, r), repeat=d))


def simplex_trick(poly, point):
    """A simplex on vertices of ``poly`` with ``point`` in its relative
    interior and ``gamma(point in S) <= gamma(point in poly)``.

    Exhaustive over vertex subsets, smallest first; returns
    ``(vertices, gamma_S)`` for the subset with the smallest ``gamma_S``.
    """
    point = vec(point)
    if not poly.contains(point):
        raise OutsidePolytopeError(f"{point} is not in the polytope")
    best = None
    for k in range(1, min(len(poly.vertices), poly.dim + 1) + 1):
        for subset in itertools.combinations(poly.vertices, k):
            if _affine_dimension(list(subset)) != k - 1:
                continue
            try:
                lam = barycentric_coordinates(subset, point)
            except OutsidePolytopeError:
                continue
            if min(lam) <= 0:
                continue
            g = Fraction(0) if k == 1 else min(lam)
            if best is None or g < best[1]:
                best = (subset, g)
    if best is None:
        raise AssertionError("no simplex through the point: Caratheodory fails")
    return best

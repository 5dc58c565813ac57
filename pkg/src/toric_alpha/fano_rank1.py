"""Toric log Fano pairs of Picard rank one.

Such a pair is fixed by the barycentric coordinates ``x`` of the origin in
the simplex spanned by its rays (``sum x_i e_i = 0``, ``sum x_i = 1``) and
by the log discrepancies ``a`` along the ``d + 1`` invariant divisors.  All
quantities here are computed from ``(x, a)``; the lattice realization is
derived on demand and checked against these formulas.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .exact import as_fraction, format_rational, is_primitive, quotient_by_primitive, vec
from .polytope import barycentric_coordinates, normalized_volume
from .simplex_bounds import PreconditionError
from .sylvester import u
from .toric import ToricLogPair, gamma_anticanonical, moment_polytope


class CoverError(PreconditionError):
    """Some ``e_i`` would not be primitive: the pair has a nontrivial finite cover."""


def _frac(v):
    return v - math.floor(v)


@dataclass(frozen=True)
class RankOneFano:
    x: tuple
    a: tuple
    q: int = field(init=False)
    w: tuple = field(init=False)
    gamma: tuple = field(init=False)
    n: tuple = field(init=False)

    def __post_init__(self):
        x, a = vec(self.x), vec(self.a)
        if len(x) < 2 or len(a) != len(x):
            raise ValueError("need d + 1 >= 2 coordinates and as many coefficients")
        if any(xi <= 0 for xi in x):
            raise ValueError("barycentric coordinates must be positive")
        if sum(x) != 1:
            raise ValueError(f"barycentric coordinates sum to {sum(x)}, not 1")
        if any(not 0 <= ai <= 1 for ai in a):
            raise ValueError("log discrepancies must lie in [0, 1]")
        if not any(a):
            raise ValueError("log discrepancies are all zero")
        q = math.lcm(*(xi.denominator for xi in x))
        qx = [int(q * xi) for xi in x]
        g = reduce(math.gcd, qx)
        n = tuple(reduce(math.gcd, qx[:i] + qx[i + 1:]) // g for i in range(len(qx)))
        if any(ni != 1 for ni in n):
            raise CoverError("nontrivial finite cover: some ray is not primitive",
                             {"n": list(n)})
        s = sum(ai * xi for ai, xi in zip(a, x))
        w = tuple(s / xi for xi in x)
        gamma = tuple(ai * xi / s for ai, xi in zip(a, x))
        for name, value in (("x", x), ("a", a), ("q", q), ("w", w), ("gamma", gamma), ("n", n)):
            object.__setattr__(self, name, value)
        # relations between x, w and gamma
        inv = sum(1 / wi for wi in w)
        assert s * inv == 1
        assert all(xj == (1 / wj) / inv for xj, wj in zip(x, w))
        assert all(gj == aj / wj for gj, aj, wj in zip(gamma, a, w))

    @property
    def d(self):
        return len(self.x) - 1

    @property
    def relation(self):
        """The primitive integer relation ``q x`` among the rays."""
        return tuple(int(self.q * xi) for xi in self.x)

    def as_dict(self):
        return {"x": [format_rational(v) for v in self.x],
                "a": [format_rational(v) for v in self.a]}

    @classmethod
    def from_dict(cls, data):
        return cls(x=data["x"], a=data["a"])


def from_barycentric(x, a):
    return RankOneFano(x=x, a=a)


def to_toric_pair(f):
    """Rays in ``N = Z^(d+1) / Z (q x)``, the images of the standard basis."""
    rows = quotient_by_primitive(f.relation)
    rays = [tuple(row[i] for row in rows) for i in range(f.d + 1)]
    for e in rays:
        if not is_primitive(e):
            raise AssertionError(f"ray {e} is not primitive although every n_i is 1")
    cones = [tuple(j for j in range(f.d + 1) if j != i) for i in range(f.d + 1)]
    return ToricLogPair(rays=rays, a=f.a, max_cones=cones)


def alpha_and_cartier(f):
    """``(min gamma_i, r)`` with ``r`` the least integer making ``r a`` and ``r w`` integral."""
    alpha = min(f.gamma)
    r = math.lcm(*(v.denominator for v in f.a + f.w))
    return alpha, r


def _candidates(f):
    """``(k, {k x})`` for ``k = 2..q`` whose fractional part has total 1 and differs from ``x``."""
    for k in range(2, f.q + 1):
        fr = tuple(_frac(k * xi) for xi in f.x)
        if sum(fr) == 1 and fr != f.x:
            yield k, fr


def mld_scan(f):
    """Minimal log discrepancy from the fractional parts of the multiples of ``x``."""
    amin = min(f.a)
    if amin == 0:
        return Fraction(0)
    best = amin
    for _, fr in _candidates(f):
        value = sum(ai * v for ai, v in zip(f.a, fr)) - min(wj * v for wj, v in zip(f.w, fr))
        best = min(best, value)
    return best


def s_epsilon_vertices(f, epsilon):
    """``Q_i = (1 - eps/a_i) x + (eps/a_i) P_i`` on the standard simplex."""
    eps = as_fraction(epsilon)
    out = []
    for i, ai in enumerate(f.a):
        t = eps / ai
        out.append(tuple((1 - t) * xj + (t if j == i else 0) for j, xj in enumerate(f.x)))
    return out


def mld_at_least_geometric(f, epsilon):
    """Whether no fractional multiple ``{k x}`` other than ``x`` is interior to ``S_eps(x)``."""
    eps = as_fraction(epsilon)
    if not 0 < eps <= min(f.a):
        raise PreconditionError("need 0 < epsilon <= min a_i",
                                {"epsilon": format_rational(eps), "minA": format_rational(min(f.a))})
    Q = s_epsilon_vertices(f, eps)
    combo = tuple(sum(g * Qi[j] for g, Qi in zip(f.gamma, Q)) for j in range(f.d + 1))
    assert combo == f.x
    hit = False
    for _, fr in _candidates(f):
        lam = barycentric_coordinates(Q, fr)
        if min(lam) > 0:
            hit = True
            break
    assert (not hit) == (mld_scan(f) >= eps), "geometric test disagrees with the scan"
    return not hit


def z_value(f, z):
    """``max_j w_j z_j - sum_i a_i z_i``: the log discrepancy of ``-sum z_i e_i``."""
    return max(wj * zj for wj, zj in zip(f.w, z)) - sum(ai * zi for ai, zi in zip(f.a, z))


def exists_z_criterion(f, epsilon):
    """First ``z = floor((1 + |z|) x)`` with ``z_value`` in ``(0, eps)``, or None."""
    eps = as_fraction(epsilon)
    if eps > min(f.a):
        raise PreconditionError("need epsilon <= min a_i")
    for total in range(1, f.q):
        z = tuple(math.floor((1 + total) * xi) for xi in f.x)
        if sum(z) != total:
            continue
        if 0 < z_value(f, z) < eps:
            return z
    return None


def extremal_example(d, q):
    """The pair ``e_0 = -sum u(d+1,q) / (q (1 + u(i,q))) e_i``, ``a = (1/q, 1, ..., 1)``.

    Its mld is ``1/q``, its alpha-invariant ``q / u(d+1, q)`` and
    ``(-q(K+B))^d = u(d+1, q) / q``; all three are asserted.
    """
    top = u(d + 1, q)
    coeffs = [1] + [top // (q * (1 + u(i, q))) for i in range(1, d + 1)]
    total = sum(coeffs)
    f = RankOneFano(x=[Fraction(c, total) for c in coeffs],
                    a=[Fraction(1, q)] + [1] * d)
    alpha, r = alpha_and_cartier(f)
    assert mld_scan(f) == Fraction(1, q)
    assert alpha == Fraction(q, top)
    assert q % r == 0
    assert volume_q_scaled(f, q) == Fraction(top, q)
    return f


def volume_q_scaled(f, q):
    """``(-q(K+B))^d = q^d d! vol(box_{-K-B})``, computed on the lattice realization."""
    pair = to_toric_pair(f)
    return q ** f.d * math.factorial(f.d) * normalized_volume(moment_polytope(pair))


def analyze(f, epsilon=None):
    """Summary used by the command line."""
    alpha, r = alpha_and_cartier(f)
    pair = to_toric_pair(f)
    out = {
        "d": f.d,
        "x": [format_rational(v) for v in f.x],
        "a": [format_rational(v) for v in f.a],
        "q": f.q,
        "w": [format_rational(v) for v in f.w],
        "gamma": [format_rational(v) for v in f.gamma],
        "alpha": format_rational(alpha),
        "cartierIndex": r,
        "mld": format_rational(mld_scan(f)),
        "rays": [list(e) for e in pair.rays],
        "gammaToric": format_rational(gamma_anticanonical(pair)),
    }
    if epsilon is not None:
        eps = as_fraction(epsilon)
        z = exists_z_criterion(f, eps)
        out["epsilon"] = format_rational(eps)
        out["mldAtLeastEpsilon"] = mld_at_least_geometric(f, eps)
        out["witness"] = None if z is None else list(z)
    return out

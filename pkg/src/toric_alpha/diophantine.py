"""Hensley-type simultaneous approximation.

Given ``q``, weights ``1 <= c_i <= q`` and ``x_1 >= ... >= x_d > 0`` with
``sum x_i >= sum q / (1 + u(i, q))``, find ``z`` in ``N^d \\ 0`` such that

    c_j z_j / (1 + sum_i c_i z_i) < x_j      for every j.

Such a ``z`` always exists unless ``x`` is the extremal vector
``(q / (1 + u(i, q)))_i``.  The solver follows the constructive route: shrink
``x`` below total mass 1, locate the first prefix where the Sylvester-type
product inequality breaks, and run a Minkowski-body lattice search on that
prefix.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import det_dc, determinant, inverse, vec
from .sylvester import extremal_sum, extremal_vector


class ExtremalInstanceError(ValueError):
    """The input is the extremal vector; no solution exists."""


class HypothesisError(ValueError):
    """A precondition of the approximation statement is not met."""


@dataclass(frozen=True)
class Solution:
    z: tuple
    certificate: tuple = field(default=())
    search_bound: tuple = field(default=())

    def as_dict(self):
        from .exact import format_rational
        return {
            "z": list(self.z),
            "certificate": [
                {"j": j, "lhs": format_rational(lhs), "rhs": format_rational(rhs)}
                for j, lhs, rhs in self.certificate
            ],
            "searchBound": list(self.search_bound),
        }


def _product(xs):
    p = Fraction(1)
    for x in xs:
        p *= x
    return p


def _check_descending(x):
    if any(xi <= 0 for xi in x):
        raise ValueError("entries must be positive")
    if any(a < b for a, b in zip(x, x[1:])):
        raise ValueError("entries must be sorted in descending order")


def verify_solution(x, c, z):
    """Exact check of ``c_j z_j / (1 + sum c_i z_i) < x_j`` for all ``j``."""
    x, c = vec(x), vec(c)
    z = tuple(int(v) for v in z)
    if not (len(x) == len(c) == len(z)):
        return False
    if any(v < 0 for v in z) or not any(z):
        return False
    denom = 1 + sum(ci * zi for ci, zi in zip(c, z))
    return all(cj * zj / denom < xj for xj, cj, zj in zip(x, c, z))


def verify_lemma15(x, c, z):
    """Exact check of ``z_j / (1 + sum c_i z_i) < x_j`` for all ``j``."""
    x, c = vec(x), vec(c)
    z = tuple(int(v) for v in z)
    if any(v < 0 for v in z) or not any(z):
        return False
    denom = 1 + sum(ci * zi for ci, zi in zip(c, z))
    return all(zj / denom < xj for xj, zj in zip(x, z))


def certificate(x, c, z):
    x, c = vec(x), vec(c)
    denom = 1 + sum(ci * zi for ci, zi in zip(c, z))
    return tuple((j, cj * zj / denom, xj) for j, (xj, cj, zj) in enumerate(zip(x, c, z)))


def sl_violation_index(x, q):
    """First ``l`` (1-based) with ``prod_{i<=l} x_i > q^l (1 - sum_{i<=l} x_i)``.

    Returns None when the inequality ``<=`` holds for every prefix.
    """
    x = vec(x)
    _check_descending(x)
    prod, total = Fraction(1), Fraction(0)
    for l, xi in enumerate(x, start=1):
        prod *= xi
        total += xi
        if prod > Fraction(q) ** l * (1 - total):
            return l
    return None


def lemma15_matrix(x, c):
    """Rows ``c`` with ``-1/x_j`` added on the diagonal."""
    x, c = vec(x), vec(c)
    d = len(x)
    return tuple(tuple(c[k] - (1 / x[j] if j == k else 0) for k in range(d)) for j in range(d))


def lemma15_search_bound(x, c):
    """Coordinate bounds ``|z_k| <= sum_j |(A^-1)_{kj}|`` for ``||A z||_inf < 1``."""
    Ainv = inverse(lemma15_matrix(x, c))
    return tuple(math.floor(sum(abs(v) for v in row)) for row in Ainv)


def _compositions(total, bounds):
    """Nonnegative integer vectors with the given sum, within bounds, lex order."""
    if len(bounds) == 1:
        if total <= bounds[0]:
            yield (total,)
        return
    rest_cap = sum(bounds[1:])
    for first in range(max(0, total - rest_cap), min(bounds[0], total) + 1):
        for tail in _compositions(total - first, bounds[1:]):
            yield (first,) + tail


def canonical_search(x, c, bounds, check=verify_solution):
    """First valid ``z`` in the box, ordered by ``sum z`` then lexicographically."""
    for s in range(1, sum(bounds) + 1):
        for z in _compositions(s, bounds):
            if check(x, c, z):
                return z
    return None


def _check_lemma15_hypothesis(x, c):
    s = sum(ci * xi for ci, xi in zip(c, x))
    if not (1 - _product(x) < s < 1):
        raise HypothesisError(
            f"need 1 - prod x < sum c x < 1, got {1 - _product(x)} and {s}")


def solve_lemma15(x, c):
    """Minkowski-body search for ``z`` with ``z_j / (1 + sum c_i z_i) < x_j``.

    Requires ``1 - prod x_i < sum c_i x_i < 1`` and ``c_i >= 1``.  Under that
    hypothesis the symmetric body ``{||A z||_inf < 1}`` has volume above
    ``2^d`` and so holds a nonzero lattice point; after a sign change it is a
    solution, so the canonical search inside its bounding box cannot fail.
    """
    x, c = vec(x), vec(c)
    if len(x) != len(c) or not x:
        raise ValueError("x and c must have the same positive length")
    if any(xi <= 0 for xi in x) or any(ci < 1 for ci in c):
        raise HypothesisError("need x_i > 0 and c_i >= 1")
    _check_lemma15_hypothesis(x, c)
    T = [-1 / (ci * xi) for ci, xi in zip(c, x)]
    # A = dc_matrix(T) with column k scaled by c_k
    det_a = det_dc(T) * _product(c)
    assert det_a == determinant(lemma15_matrix(x, c))
    assert 0 < abs(det_a) < 1
    bounds = lemma15_search_bound(x, c)
    z = canonical_search(x, c, bounds, verify_lemma15)
    if z is None:
        raise AssertionError("empty Minkowski body: this contradicts the volume bound")
    denom = 1 + sum(ci * zi for ci, zi in zip(c, z))
    cert = tuple((j, zj / denom, xj) for j, (xj, zj) in enumerate(zip(x, z)))
    return Solution(z=z, certificate=cert, search_bound=bounds)


def is_extremal(x, q):
    return vec(x) == extremal_vector(len(x), q)


def shrink_to_unit_mass(x, q):
    """Scale ``x`` so its total sits midway between the hypothesis sum and 1."""
    x = vec(x)
    lower = extremal_sum(len(x), q)
    target = (lower + 1) / 2
    lam = target / sum(x)
    return tuple(lam * xi for xi in x)


def solve_lhn(x, c, q):
    """Return ``z`` with ``c_j z_j / (1 + sum c_i z_i) < x_j`` for all ``j``.

    The constructive reduction (shrink, prefix index, Minkowski body) yields
    a box holding a solution padded by zeros.  Its total bounds the search,
    and the returned ``z`` is the canonical one for the original ``x``:
    least ``sum z``, then lexicographic.  Enumerating the box itself is
    hopeless near the threshold, where it holds billions of points.
    """
    x, c = vec(x), vec(c)
    if not isinstance(q, int) or q < 1:
        raise ValueError("q must be a positive integer")
    if len(x) != len(c) or not x:
        raise ValueError("x and c must have the same positive length")
    _check_descending(x)
    if any(not (1 <= ci <= q) for ci in c):
        raise HypothesisError("need 1 <= c_i <= q")
    if is_extremal(x, q):
        raise ExtremalInstanceError("x is the extremal vector: no solution exists")
    if sum(x) < extremal_sum(len(x), q):
        raise HypothesisError("sum of x is below the Sylvester threshold")
    xs = x if sum(x) < 1 else shrink_to_unit_mass(x, q)
    l = sl_violation_index(xs, q)
    assert l is not None, "Sylvester product inequality cannot hold on every prefix"
    xp, cp = [xs[i] / c[i] for i in range(l)], c[:l]
    _check_lemma15_hypothesis(xp, cp)
    bounds = lemma15_search_bound(xp, cp) + (0,) * (len(x) - l)
    # The body guarantees a solution of total at most sum(bounds); the
    # smallest one for the original x is usually far smaller.
    z = smallest_solution(x, c, sum(bounds))
    if z is None:
        raise AssertionError("empty Minkowski body: this contradicts the volume bound")
    return Solution(z=z, certificate=certificate(x, c, z), search_bound=bounds)


def smallest_solution(x, c, max_total):
    """First valid ``z`` ordered by ``sum z`` then lexicographically, up to ``max_total``."""
    x, c = vec(x), vec(c)
    top = max(c)
    for s in range(1, max_total + 1):
        # c_j z_j < x_j (1 + sum c z) <= x_j (1 + top s)
        caps = tuple(min(s, math.ceil(xj * (1 + top * s) / cj) - 1) for xj, cj in zip(x, c))
        if sum(caps) < s or min(caps) < 0:
            continue
        for z in _compositions(s, caps):
            if verify_solution(x, c, z):
                return z
    return None


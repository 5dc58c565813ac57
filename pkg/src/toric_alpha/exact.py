"""Exact rational and integer linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of Fractions (or
ints for lattice vectors) and matrices are tuples of row tuples.  Nothing in
this package touches floating point.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp


class DegenerateSystemError(ValueError):
    """Raised when a linear system has no unique solution."""


class _Infinity:
    """``+inf`` for thresholds; compares above every rational."""

    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("toric_alpha.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return "INF"


INF = _Infinity()


def as_fraction(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if value.strip() == "inf":
            raise ValueError("infinity is not a rational")
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an exact 'p/q' string")
    # sympy Rational, gmpy mpq, ...
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError(f"cannot interpret {value!r} as a rational") from None


def vec(values):
    return tuple(as_fraction(v) for v in values)


def mat(rows):
    return tuple(vec(r) for r in rows)


def format_rational(x):
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if x is INF:
        return "inf"
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def matvec(M, v):
    return tuple(dot(row, v) for row in M)


def matmul(A, B):
    if A and len(A[0]) != len(B):
        raise ValueError("inner dimensions differ")
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def transpose(M):
    return tuple(zip(*M))


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _check_square(M):
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    return n


def determinant(M):
    """Exact determinant by Bareiss fraction-free elimination.

    Rational input is first scaled to an integer matrix so that every
    intermediate division is exact.
    """
    n = _check_square(M)
    if n == 0:
        return Fraction(1)
    rows = [vec(r) for r in M]
    denom = 1
    A = []
    for r in rows:
        m = lcm(*(x.denominator for x in r))
        denom *= m
        A.append([int(x * m) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1], denom)


def dc_matrix(T):
    """The matrix with ``1 + T_i`` on the diagonal and 1 elsewhere."""
    T = vec(T)
    d = len(T)
    return tuple(tuple(1 + T[i] if i == j else Fraction(1) for j in range(d)) for i in range(d))


def det_dc(T):
    """Closed form ``(1 + sum 1/T_i) * prod T_i`` for ``det(dc_matrix(T))``.

    With a zero entry the closed form is undefined and the assembled matrix
    is used instead.
    """
    T = vec(T)
    if not T:
        raise ValueError("need at least one entry")
    if any(t == 0 for t in T):
        return determinant(dc_matrix(T))
    prod = reduce(lambda a, b: a * b, T, Fraction(1))
    return (1 + sum(1 / t for t in T)) * prod


def solve_linear(M, b):
    """Solve ``M x = b`` exactly by Gauss-Jordan elimination."""
    n = _check_square(M)
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    A = [list(vec(row)) + [as_fraction(bi)] for row, bi in zip(M, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if A[r][col] != 0), None)
        if pivot is None:
            raise DegenerateSystemError("degenerate system")
        A[col], A[pivot] = A[pivot], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(A[r][n] for r in range(n))


def inverse(M):
    n = _check_square(M)
    cols = [solve_linear(M, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return transpose(cols)


def rank(rows):
    """Rank of a list of rational vectors."""
    A = [list(vec(r)) for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(A)) if A[i][col] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        for i in range(r + 1, len(A)):
            if A[i][col] != 0:
                f = A[i][col] / A[r][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for all rows}`` in reduced echelon form."""
    A = [list(vec(r)) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(A)) if A[i][col] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        p = A[r][col]
        A[r] = [x / p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            x[pcol] = -A[i][fcol]
        basis.append(tuple(x))
    return basis


# -- lattice vectors ---------------------------------------------------------

def primitive_part(v):
    """Return ``(v', n)`` with ``v = n * v'`` and ``v'`` primitive."""
    v = tuple(int(x) for x in v)
    n = reduce(gcd, v, 0)
    if n == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(x // n for x in v), n


def is_primitive(v):
    return reduce(gcd, (int(x) for x in v), 0) == 1


def integral_direction(v):
    """Scale a nonzero rational vector to a primitive integer vector (same ray)."""
    v = vec(v)
    m = lcm(*(x.denominator for x in v))
    return primitive_part([int(x * m) for x in v])[0]


def lcm_of_denominators(values):
    return lcm(*(as_fraction(x).denominator for x in values))


# -- integer normal forms (sympy backed) --------------------------------------

def _dm(rows):
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (len(rows), len(rows[0])), ZZ)


def _to_int_rows(dm):
    return tuple(tuple(int(x) for x in row) for row in dm.to_list())


def row_hermite_form(rows):
    """Canonical form of an integer matrix of full row rank under ``M -> G M``,
    ``G`` unimodular."""
    return _to_int_rows(hermite_normal_form(_dm(rows).transpose()).transpose())


def quotient_by_primitive(v):
    """Rows of a surjection ``Z^n -> Z^(n-1)`` whose kernel is ``Z v``.

    ``v`` must be primitive.  The rows come from the Smith decomposition of
    the column ``v`` and are LLL-reduced so the image vectors stay short.
    """
    v = tuple(int(x) for x in v)
    if not is_primitive(v):
        raise ValueError(f"{v} is not primitive")
    n = len(v)
    if n == 1:
        return ()
    smf, s, _ = smith_normal_decomp(_dm([[x] for x in v]))
    S = _to_int_rows(s)
    rows = S[1:]
    reduced = _to_int_rows(_dm(rows).lll())
    assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in reduced)
    return reduced


# -- linear programming -------------------------------------------------------

class UnboundedLPError(ValueError):
    pass


def lp_maximize(c, A, b):
    """Maximize ``c . x`` subject to ``A x <= b`` and ``x >= 0``, exactly.

    Two-phase simplex on a dense tableau with Bland's rule, so it always
    terminates.  Returns ``(value, x)``, or None when the region is empty.
    """
    c, b = vec(c), vec(b)
    A = [vec(row) for row in A]
    m, n = len(A), len(c)
    art = n + m
    width = n + m + 1
    rows = [list(A[i]) + [Fraction(int(k == i)) for k in range(m)] + [Fraction(-1), b[i]]
            for i in range(m)]
    basis = [n + i for i in range(m)]

    def pivot(r, col):
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(m):
            f = rows[i][col]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        basis[r] = col

    def optimize(obj, allowed):
        while True:
            z = list(obj) + [Fraction(0)]
            for r, bc in enumerate(basis):
                f = z[bc]
                if f != 0:
                    z = [x - f * y for x, y in zip(z, rows[r])]
            enter = next((j for j in range(width) if j in allowed and z[j] > 0), None)
            if enter is None:
                return -z[-1]
            best = None
            for r in range(m):
                coef = rows[r][enter]
                if coef > 0:
                    key = (rows[r][-1] / coef, basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                raise UnboundedLPError("objective is unbounded")
            pivot(best[1], enter)

    allowed = set(range(n + m))
    if m and min(b) < 0:
        pivot(min(range(m), key=lambda i: (b[i], i)), art)
        phase1 = [Fraction(0)] * width
        phase1[art] = Fraction(-1)
        if optimize(phase1, allowed | {art}) < 0:
            return None
        if art in basis:
            r = basis.index(art)
            col = next((j for j in range(n + m) if rows[r][j] != 0), None)
            if col is not None:
                pivot(r, col)
    value = optimize(list(c) + [Fraction(0)] * (m + 1), allowed)
    x = [Fraction(0)] * n
    for r, bc in enumerate(basis):
        if bc < n:
            x[bc] = rows[r][-1]
    return value, tuple(x)

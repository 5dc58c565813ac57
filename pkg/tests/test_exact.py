import pickle
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_alpha.exact import (
    INF,
    DegenerateSystemError,
    as_fraction,
    dc_matrix,
    det_dc,
    determinant,
    format_rational,
    identity,
    inverse,
    lp_maximize,
    matmul,
    matvec,
    primitive_part,
    quotient_by_primitive,
    solve_linear,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero = rationals.filter(lambda t: t != 0)


def test_determinant_examples():
    assert determinant(identity(3)) == 1
    assert determinant([[1, 2], [3, 4]]) == -2
    x = (Fraction(1, 2), Fraction(7, 20))
    A = [[1 - 1 / x[0], 1], [1, 1 - 1 / x[1]]]
    assert determinant(A) == Fraction(6, 7)


def test_determinant_rejects_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_det_dc_examples():
    assert det_dc([5]) == 6
    assert det_dc([1, 1]) == 3
    assert det_dc([1, 2, 3]) == 17
    assert determinant(dc_matrix([1, 2, 3])) == 17


def test_det_dc_zero_entry_falls_back():
    assert det_dc([0, 2]) == determinant([[1, 1], [1, 3]]) == 2


@settings(max_examples=500, deadline=None)
@given(st.lists(nonzero, min_size=1, max_size=6))
def test_det_dc_matches_assembled_matrix(T):
    assert determinant(dc_matrix(T)) == det_dc(T)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
def test_determinant_agrees_with_sympy(M):
    ref = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in M]).det()
    assert determinant(M) == Fraction(int(ref.p), int(ref.q))


def test_primitive_part_examples():
    assert primitive_part((2, 4)) == ((1, 2), 2)
    assert primitive_part((1, 0, 0)) == ((1, 0, 0), 1)
    assert primitive_part((-14, -6)) == ((-7, -3), 2)
    with pytest.raises(ValueError):
        primitive_part((0, 0))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=4).filter(any))
def test_primitive_part_idempotent(v):
    p, n = primitive_part(v)
    assert tuple(n * x for x in p) == tuple(v)
    assert primitive_part(p) == (p, 1)


def test_solve_linear_examples():
    assert solve_linear(identity(2), [3, -1]) == (3, -1)
    assert solve_linear([[2, 1], [1, 2]], [3, 3]) == (1, 1)
    # barycentric coordinates of 0 in conv((1,0),(0,1),(-3,-2))
    M = [[1, 0, -3], [0, 1, -2], [1, 1, 1]]
    assert solve_linear(M, [0, 0, 1]) == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))
    with pytest.raises(DegenerateSystemError):
        solve_linear([[1, 2], [2, 4]], [1, 1])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
                        st.lists(rationals, min_size=n, max_size=n))))
def test_solve_then_multiply(data):
    M, b = data
    if determinant(M) == 0:
        return
    assert matvec(M, solve_linear(M, b)) == tuple(b)
    assert matmul(M, inverse(M)) == identity(len(M))


def test_infinity_sentinel():
    assert INF > Fraction(10 ** 9) and not INF < 3
    assert min(INF, Fraction(1, 2)) == Fraction(1, 2)
    assert format_rational(INF) == "inf"
    assert pickle.loads(pickle.dumps(INF)) is INF


def test_format_and_parse():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert as_fraction("21/8") == Fraction(21, 8)
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(ValueError):
        as_fraction("inf")


def test_quotient_by_primitive_kernel():
    rows = quotient_by_primitive((1, 3, 2))
    assert len(rows) == 2
    assert all(sum(a * b for a, b in zip(r, (1, 3, 2))) == 0 for r in rows)
    # the map is onto Z^2: the 2x2 minors are coprime
    minors = [rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i] for i in range(3) for j in range(i + 1, 3)]
    assert sympy.igcd(*minors) == 1


def test_lp_small_cases():
    val, x = lp_maximize([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert val == Fraction(14, 5) and x == (Fraction(8, 5), Fraction(6, 5))
    # phase one needed: x >= 1 written as -x <= -1
    val, x = lp_maximize([-1], [[-1]], [-1])
    assert val == -1 and x == (1,)
    assert lp_maximize([1], [[1], [-1]], [1, -2]) is None

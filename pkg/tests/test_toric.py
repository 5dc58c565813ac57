import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from toric_alpha.exact import INF
from toric_alpha.generators import random_divisor, random_toric_pair
from toric_alpha.polytope import EmptyPolytopeError, dual, gamma_point, lattice_points, width
from toric_alpha.simplex_bounds import PreconditionError
from toric_alpha.toric import (
    FiniteLinearSystem,
    InvariantDivisor,
    NotCompleteError,
    ToricLogPair,
    alpha_invariant,
    fano_finiteness_census,
    same_fan_class,
    corollary_g0_check,
    fixed_mult_at,
    gamma_anticanonical,
    gamma_finite_system,
    gb_vb_checks,
    lct_invariant,
    log_discrepancy,
    mld,
    moment_polytope,
    product_alpha_check,
    product_pair,
    sl_inequality_check,
    support_value,
    width_at,
)

h = Fraction(1, 2)
P2 = ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1)], a=[1, 1, 1], max_cones=[(0, 1), (1, 2), (0, 2)])
P1 = ToricLogPair(rays=[(1,), (-1,)], a=[1, 1])
P1xP1 = ToricLogPair(rays=[(1, 0), (-1, 0), (0, 1), (0, -1)], a=[1, 1, 1, 1])
ME1 = ToricLogPair(rays=[(1, 0), (0, 1), (-3, -2)], a=[1, 1, 1])
ME2 = ToricLogPair(rays=[(1, 0), (0, 1), (-7, -3)], a=[1, 1, h])
seeds = st.integers(0, 10 ** 9)


def verts(poly):
    return sorted(tuple(v) for v in poly.vertices)


def test_rejects_bad_input():
    with pytest.raises(ValueError, match=r"use \(-7, -3\)"):
        ToricLogPair(rays=[(1, 0), (0, 1), (-14, -6)], a=[1, 1, 1])
    with pytest.raises(NotCompleteError):
        ToricLogPair(rays=[(1, 0), (0, 1)], a=[1, 1])
    with pytest.raises(ValueError):
        ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1)], a=[1, 2, 1])


def test_round_trip_dict():
    assert ToricLogPair.from_dict(ME2.as_dict()) == ME2
    assert ToricLogPair.from_dict(P2.as_dict()).max_cones == P2.max_cones


def test_nef_and_cartier_data():
    assert P2.nef is True
    assert P2.cartier_data((0, 1)) == (1, 1)
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    rays = [(1, 0), (1, 1), (0, 1), (-1, -1)]
    third = Fraction(1, 3)
    assert ToricLogPair(rays=rays, a=[1, 1, 1, 1], max_cones=cones).nef is True
    # e_1 / a_1 = (1, 1) falls strictly inside conv(e_i / a_i): not nef
    bad = ToricLogPair(rays=rays, a=[third, 1, third, 1], max_cones=cones)
    assert bad.nef is False and bad.warnings


def test_moment_polytope_examples():
    assert verts(moment_polytope(P2, [0, 0, 1])) == [(0, 0), (0, 1), (1, 0)]
    assert verts(moment_polytope(ME1)) == [(-1, -1), (-1, 2), (1, -1)]
    assert verts(moment_polytope(P1)) == [(-1,), (1,)]
    assert verts(moment_polytope(ME2)) == [(-1, -1), (-1, Fraction(5, 2)), (h, -1)]
    with pytest.raises(EmptyPolytopeError):
        moment_polytope(P2, [-1, -1, -1])


def test_width_and_fixed_multiplicity_examples():
    assert [width_at(P2, [0, 0, 2], i) for i in range(3)] == [2, 2, 2]
    assert [fixed_mult_at(P2, [0, 0, 2], i) for i in range(3)] == [0, 0, 0]
    bl = ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1), (1, 1)], a=[1, 1, 1, 1])
    L = [0, 0, 1, 1]
    assert fixed_mult_at(bl, L, 3) == 1 and width_at(bl, L, 3) == 2
    point = [0, 0, 0]
    assert width(moment_polytope(P2, point), P2.rays[0]) == 0


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 3))
def test_width_identity(seed, d):
    rng = random.Random(seed)
    pair = random_toric_pair(rng, d)
    l = random_divisor(rng, pair)
    box = moment_polytope(pair, l)
    for i, e in enumerate(pair.rays):
        assert width(box, e) == width_at(pair, l, i) - fixed_mult_at(pair, l, i)


def test_gamma_finite_system_examples():
    tri = ToricLogPair(rays=[(-1, -1), (1, 0), (0, 1)], a=[1, 1, 1])
    sys = FiniteLinearSystem(InvariantDivisor([2, 0, 0]), [(0, 0), (1, 0), (0, 1)])
    g, per_ray = gamma_finite_system(tri, sys)
    assert per_ray == (h, 1, 1) and g == h
    g, per_ray = gamma_finite_system(P2, FiniteLinearSystem(InvariantDivisor([0, 0, 0]), [(0, 0)]))
    assert g is INF and set(per_ray) == {INF}
    half = ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1)], a=[1, 1, h])
    pts = lattice_points(moment_polytope(half, [0, 0, 2]))
    assert len(pts) == 6
    g, _ = gamma_finite_system(half, FiniteLinearSystem(InvariantDivisor([0, 0, 2]), pts))
    assert g == Fraction(1, 4)
    with pytest.raises(ValueError):
        gamma_finite_system(P2, FiniteLinearSystem(InvariantDivisor([0, 0, 0]), []))


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 2))
def test_finite_system_limit_equals_alpha(seed, d):
    rng = random.Random(seed)
    pair = random_toric_pair(rng, d)
    l = random_divisor(rng, pair)
    box = moment_polytope(pair, l)
    r = math.lcm(*(x.denominator for v in box.vertices for x in v))
    rl = [r * x for x in l]
    pts = lattice_points(moment_polytope(pair, rl))
    g, _ = gamma_finite_system(pair, FiniteLinearSystem(InvariantDivisor(rl), pts))
    # scaling L by r divides thresholds by r
    assert (g if g is INF else g * r) == alpha_invariant(pair, l)


def test_alpha_known_values():
    assert alpha_invariant(P2, [1, 0, 0]) == 1
    assert alpha_invariant(P2, [2, 0, 0]) == h
    assert alpha_invariant(P2) == Fraction(1, 3)
    assert alpha_invariant(P2, [0, 0, 0]) is INF


@pytest.mark.parametrize("ap,am", [(1, 1), (h, 1), (Fraction(1, 3), Fraction(3, 4))])
@pytest.mark.parametrize("n", [1, 2, 5])
def test_curve_formula(ap, am, n):
    pair = ToricLogPair(rays=[(1,), (-1,)], a=[ap, am])
    assert alpha_invariant(pair, [n, 0]) == mld(pair) / n == Fraction(min(ap, am)) / n


def test_lct_examples():
    assert lct_invariant(P2, [0, 0, 3]) == Fraction(1, 3)
    assert lct_invariant(P2, [0, 0, 0]) is INF
    with pytest.raises(ValueError):
        lct_invariant(P2, [-1, 0, 0])


def test_log_discrepancy_examples():
    for i, e in enumerate(ME2.rays):
        assert log_discrepancy(ME2, e) == ME2.a[i]
    assert log_discrepancy(ME2, (-7, -3)) == h
    assert log_discrepancy(P2, (1, 1)) == 2
    with pytest.warns(UserWarning):
        assert log_discrepancy(P2, (2, 2)) == 2
    with pytest.raises(ValueError):
        log_discrepancy(P2, (0, 0))


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 3), st.integers(2, 5))
def test_support_value_homogeneous(seed, d, n):
    rng = random.Random(seed)
    pair = random_toric_pair(rng, d)
    e = tuple(rng.randint(-3, 3) for _ in range(d))
    assert support_value(pair, tuple(n * x for x in e)) == n * support_value(pair, e)


def test_mld_examples():
    assert mld(P2) == 1
    assert mld(ME1) == 1
    assert mld(ME2) == h
    assert mld(ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1)], a=[0, 1, 1])) == 0


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 3))
def test_mld_matches_box_oracle(seed, d):
    pair = random_toric_pair(random.Random(seed), d)
    m = mld(pair)
    assert m == oracles.mld_box(pair.rays, pair.a)
    assert m <= min(pair.a)


def test_mld_equals_min_a_on_smooth_pairs():
    for pair in (P2, P1xP1, P1):
        assert mld(pair) == min(pair.a) == 1


def test_gamma_anticanonical_examples():
    assert gamma_anticanonical(P2) == Fraction(1, 3)
    assert gamma_anticanonical(ME1) == Fraction(1, 6)
    assert gamma_anticanonical(ME2) == Fraction(1, 21)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 3))
def test_three_routes_to_the_anticanonical_threshold(seed, d):
    pair = random_toric_pair(random.Random(seed), d)
    box = moment_polytope(pair)
    zero = (0,) * d
    g = gamma_anticanonical(pair)
    assert g == alpha_invariant(pair) == gamma_point(zero, dual(box))
    assert g == oracles.gamma_sup(zero, oracles.anticanonical_vertices(pair.rays, pair.a))


def test_corollary_g0_examples():
    c = corollary_g0_check(P2, [1, 0, 0])
    assert c.passed and c.values["alpha"] == 1
    c = corollary_g0_check(P1xP1, [1, 0, 2, 0])
    assert c.passed and c.values["alpha"] == h
    c = corollary_g0_check(ME1, ME1.a)
    assert c.passed and c.values["alpha"] == Fraction(1, 6)
    c = corollary_g0_check(ME2, [2 * x for x in ME2.a])
    assert c.passed and c.values["alpha"] * 2 == Fraction(1, 21)
    bl = ToricLogPair(rays=[(1, 0), (0, 1), (-1, -1), (1, 1)], a=[1, 1, 1, 1])
    with pytest.raises(PreconditionError):
        corollary_g0_check(bl, [0, 0, 1, 1])


def test_sl_examples():
    c = sl_inequality_check(P2, [2, 0, 0])
    assert c.passed and c.values["lhs"] == 1
    c = sl_inequality_check(ME1)
    assert c.passed and c.values["lhs"] == Fraction(1, 6)
    for n in (1, 3):
        c = sl_inequality_check(ToricLogPair(rays=[(1,), (-1,)], a=[h, 1]), [n, 0])
        assert c.passed and c.values["lhs"] == h
    c = sl_inequality_check(P2, [0, 0, 0])
    assert c.passed and c.notes


def test_gb_vb_examples():
    rep = gb_vb_checks(ME1, 1)
    assert rep.passed and rep.equality and rep.volume == 6 and rep.volume_bound == 144
    rep = gb_vb_checks(P2, 1)
    assert rep.passed and not rep.equality and rep.volume == 9
    rep = gb_vb_checks(ME2, 2)
    assert rep.passed and rep.equality and rep.volume == Fraction(21, 4)
    assert 4 * rep.volume == 21
    rep = gb_vb_checks(ME2, 1)
    assert not rep.precondition and rep.passed


def test_product_examples():
    for a, b in [(1, 2), (3, 2), (1, 1)]:
        c = product_alpha_check(P1, [a, 0], P1, [b, 0])
        assert c.passed and c.values["product"] == min(Fraction(1, a), Fraction(1, b))
    c = product_alpha_check(P1, [0, 0], P1, [2, 0])
    assert c.passed and c.values["product"] == h
    half = ToricLogPair(rays=[(1,), (-1,)], a=[h, 1])
    c = product_alpha_check(half, [1, 0], P1, [1, 0])
    assert c.passed and c.values["product"] == h
    prod = product_pair(P2, P1)
    assert prod.dim == 3 and len(prod.rays) == 5


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_product_formula_random(seed):
    rng = random.Random(seed)
    p1, p2 = random_toric_pair(rng, rng.randint(1, 2)), random_toric_pair(rng, rng.randint(1, 2))
    assert product_alpha_check(p1, random_divisor(rng, p1), p2, random_divisor(rng, p2)).passed


def test_fano_census_small_radius():
    c = fano_finiteness_census(2, 1, 1)
    assert c.passed and not c.complete and c.volume_bound == 144
    assert any(same_fan_class(m.rays, P2.rays) for m in c.members)
    assert any(same_fan_class(m.rays, P1xP1.rays) for m in c.members)
    assert all(mld(m) >= 1 and m.nef for m in c.members)
    # P^1 meets the bound on vol(P - P) with equality
    line = fano_finiteness_census(1, 1, 1)
    assert line.passed and line.complete and line.volume_bound == 4
    with pytest.raises(PreconditionError):
        fano_finiteness_census(2, 1, 9)

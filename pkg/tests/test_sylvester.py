from fractions import Fraction

import pytest

from oracles import SYLVESTER
from toric_alpha.sylvester import (
    errata_bound,
    extremal_sum,
    extremal_vector,
    gamma_bound,
    identity_checks,
    sylvester_terms,
    u,
)


def test_sylvester_sequence_matches_oeis():
    assert sylvester_terms(6) == list(SYLVESTER)


def test_small_values():
    assert u(1, 3) == 3
    assert u(3, 2) == 42
    assert u(4, 2) == 1806
    assert u(5, 1) == 1806
    assert u(6, 1) == 1806 * 1807


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        u(0, 1)
    with pytest.raises(ValueError):
        u(1, 0)


def test_identity_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == 1 - Fraction(1, 6)
    assert identity_checks(2, 1).passed
    assert Fraction(1, 6) == Fraction(1, 5) - Fraction(1, 30)
    assert identity_checks(1, 5).passed
    assert 3 * 7 * 43 == u(4, 2) // 2


@pytest.mark.parametrize("p", range(1, 7))
@pytest.mark.parametrize("q", range(1, 5))
def test_identities_hold(p, q):
    assert identity_checks(p, q).passed


def test_divisibility_and_coprimality():
    for q in range(1, 5):
        for p in range(1, 6):
            assert u(p, q) % q == 0
            for r in range(p + 1, 6):
                assert Fraction(1 + u(p, q), 1 + u(r, q)).numerator == 1 + u(p, q)


def test_gamma_bound_examples():
    assert gamma_bound(1, 1) == Fraction(1, 2)
    assert gamma_bound(2, 1) == Fraction(1, 6)
    assert gamma_bound(2, 2) == Fraction(1, 21)


def test_gamma_bound_decreasing_in_d():
    for q in range(1, 5):
        vals = [gamma_bound(d, q) for d in range(1, 6)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_monotone_in_q():
    for p in range(1, 6):
        assert all(u(p, q) < u(p, q + 1) for q in range(1, 6))


def test_errata_bound_examples():
    assert errata_bound(1, 1) == 1
    assert errata_bound(2, 1) == 4
    assert errata_bound(2, 3) == 72


def test_extremal_vector_sum():
    for d in range(1, 5):
        for q in range(1, 4):
            assert extremal_sum(d, q) == 1 - Fraction(q, u(d + 1, q))
            assert extremal_vector(d, q)[0] == Fraction(q, 1 + q)
